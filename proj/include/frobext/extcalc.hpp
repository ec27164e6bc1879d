#pragma once

#include <optional>
#include <string>

#include "frobext/functor_expr.hpp"
#include "frobext/graded.hpp"
#include "frobext/partition.hpp"
#include "frobext/poly.hpp"

namespace frobext {

/// An Ext computation result: exact Poincare polynomial, a (possibly
/// symbolic) grading shift, an optional Specht-module label, and the name
/// of the closed-form rule that produced it.
struct ExtAnswer {
    PoincarePoly poincare;
    ShiftSpec shift;
    std::optional<Partition> specht_label;
    std::string provenance;

    bool same_value(const ExtAnswer& o) const {
        return poincare == o.poincare && shift == o.shift;
    }
};

/// Graded dimension of the multidegree-lambda component of F evaluated on
/// one copy of U per tensor slot: the character symmetric function of F
/// expanded over the graded alphabet {x_m t^e}, coefficient of x^lambda.
/// F must be untwisted and drawn from {I, D^a, S^a, L^a, Schur, Weyl,
/// tensor products}; anything else throws unsupported_functor.
PoincarePoly multidegree_component(const Partition& lambda, const FunctorExpr& f,
                                   const GradedSpace& u);

/// (1/d!) sum_rho |class| chi_mu chi_lambda prod_j P_U(t^{rho_j}):
/// the graded multiplicity of Sp_mu in the Sp_lambda-isotypic part of
/// U^{(x)d} (x) k[Sigma_d], exact and certified integral.
PoincarePoly weyl_schur_multiplicity(const Partition& mu, const Partition& lambda,
                                     const GradedSpace& u);

ExtAnswer ext_divided_vs_twisted(const Partition& lambda, const FunctorExpr& f,
                                 int p, int i);

ExtAnswer ext_weyl_schur_twisted(const Partition& mu, const Partition& lambda,
                                 int p, int i);

ExtAnswer ext_untwisted_from_fk(const Partition& lambda, int p, int i, int k);

ExtAnswer ext_weyl_vs_fk_schur(const Partition& mu, const Partition& lambda,
                               int p, int i, int j, int k);

/// Do the two independent evaluation routes for Ext^*(D^{d(i)}, S_nu^{(i)})
/// agree as polynomials?
bool consistency_cor34_vs_cor35(const Partition& nu, int p, int i);

}  // namespace frobext
