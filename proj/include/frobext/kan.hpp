#pragma once

#include <string>
#include <vector>

#include "frobext/extcalc.hpp"
#include "frobext/functor_expr.hpp"

namespace frobext {

struct RewriteStep {
    std::string rule;    // which result licensed the step, e.g. "Thm 3.2"
    std::string before;  // whole-expression snapshots
    std::string after;
};

struct NormalizeResult {
    FunctorExpr expr;
    std::vector<RewriteStep> trace;
};

/// Position-selection strategies. All must agree on the test corpus; the
/// default is what the CLI and evaluator use.
enum class RewriteStrategy {
    InnermostLeftmost,
    InnermostRightmost,
    OutermostLeftmost,
};

/// Rewrite to a normal form unreachable by further rules, recording every
/// step. Throws on degree-inconsistent input.
NormalizeResult normalize(const FunctorExpr& e, int p,
                          RewriteStrategy strategy = RewriteStrategy::InnermostLeftmost);

/// Kan value of F along the i-th twist under the Ext-coinvariance
/// hypothesis. For the recognized Schur family the hypothesis holds
/// automatically and the value collapses to a shifted Schur functor;
/// otherwise the caller must assert the hypothesis and receives the
/// symbolic SymTensorExt form.
FunctorExpr kan_value_conditional(const FunctorExpr& f, int p, int i,
                                  bool hypothesis);

/// Normalize an Ext query and dispatch the normal form to the matching
/// closed-form evaluator. Throws unsupported_functor when the normal form
/// is not a supported shape.
ExtAnswer evaluate_ext_query(const FunctorExpr& e, int p);

}  // namespace frobext
