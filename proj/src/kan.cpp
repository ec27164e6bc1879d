#include "frobext/kan.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace frobext {

namespace {

using Kind = FunctorExpr::Kind;

GradedSpace engine_a_space(int p, int j) {
    GradedSpace u = a_space(p, j);
    u.label = "A_" + std::to_string(j);
    return u;
}

GradedSpace unit_space() { return GradedSpace{PoincarePoly::one(), "k"}; }

// Total twist depth at the top of the expression: Twist(Twist(F,a),b) has
// depth a + b.
int twist_depth(const FunctorExpr& e) {
    int depth = 0;
    const FunctorExpr* cur = &e;
    while (cur->kind() == Kind::Twist) {
        depth += cur->twist_level();
        cur = &cur->child();
    }
    return depth;
}

// Remove j levels of twist from the top; requires twist_depth(e) >= j.
FunctorExpr untwist(const FunctorExpr& e, int j) {
    if (j == 0) return e;
    if (e.kind() != Kind::Twist) throw std::logic_error("untwist: not a twist");
    int level = e.twist_level();
    if (level > j) return FunctorExpr::twist(e.child(), level - j);
    if (level == j) return e.child();
    return untwist(e.child(), j - level);
}

// If a is an iterated twist of the identity functor, its total twist level.
std::optional<int> twist_of_identity(const FunctorExpr& a) {
    const FunctorExpr* cur = &a;
    int depth = 0;
    while (cur->kind() == Kind::Twist) {
        depth += cur->twist_level();
        cur = &cur->child();
    }
    if (cur->kind() == Kind::Identity) return depth;
    return std::nullopt;
}

bool is_unit_space(const GradedSpace& u) {
    return u.poincare == PoincarePoly::one();
}

struct RuleResult {
    FunctorExpr expr;
    std::string rule;
};

// Rebuild a Schur-family node after peeling, keeping the original flavor
// where the shape allows it.
FunctorExpr schur_flavored(const FunctorExpr& original, const Partition& lambda) {
    if (original.kind() == Kind::Sym && lambda.length() <= 1)
        return lambda.empty() ? FunctorExpr::schur(lambda)
                              : FunctorExpr::sym(lambda.parts()[0]);
    if (original.kind() == Kind::Exterior &&
        (lambda.empty() || lambda.part(0) == 1))
        return lambda.empty() ? FunctorExpr::schur(lambda)
                              : FunctorExpr::exterior(lambda.length());
    return FunctorExpr::schur(lambda);
}

// One deterministic rule per node kind; returns the rewritten node and the
// name of the result that licenses the step.
std::optional<RuleResult> apply_rule(const FunctorExpr& e, int p) {
    switch (e.kind()) {
        case Kind::Twist: {
            if (e.twist_level() == 0)
                return RuleResult{e.child(), "twist normalization"};
            if (e.child().kind() == Kind::Twist)
                return RuleResult{
                    FunctorExpr::twist(e.child().child(),
                                       e.twist_level() + e.child().twist_level()),
                    "twist normalization"};
            return std::nullopt;
        }

        case Kind::Tensor: {
            const auto& children = e.children();
            // flatten nested tensors
            for (size_t n = 0; n < children.size(); ++n) {
                if (children[n].kind() == Kind::Tensor) {
                    std::vector<FunctorExpr> flat;
                    for (size_t m = 0; m < children.size(); ++m) {
                        if (m == n)
                            for (auto& c : children[m].children()) flat.push_back(c);
                        else
                            flat.push_back(children[m]);
                    }
                    return RuleResult{FunctorExpr::tensor(std::move(flat)),
                                      "tensor normalization"};
                }
            }
            // hoist shifts out of tensor factors
            for (size_t n = 0; n < children.size(); ++n) {
                if (children[n].kind() == Kind::Shift) {
                    std::vector<FunctorExpr> flat = children;
                    ShiftSpec s = children[n].shift_spec();
                    flat[n] = children[n].child();
                    return RuleResult{
                        FunctorExpr::shift(FunctorExpr::tensor(std::move(flat)), s),
                        "shift hoisting"};
                }
            }
            // collect a common twist from all factors
            int min_twist = -1;
            for (auto& c : children) {
                int t = twist_depth(c);
                min_twist = (min_twist < 0) ? t : std::min(min_twist, t);
            }
            if (min_twist > 0) {
                std::vector<FunctorExpr> peeled;
                for (auto& c : children) peeled.push_back(untwist(c, min_twist));
                return RuleResult{
                    FunctorExpr::twist(FunctorExpr::tensor(std::move(peeled)), min_twist),
                    "twist collection"};
            }
            return std::nullopt;
        }

        case Kind::Param: {
            if (is_unit_space(e.space()))
                return RuleResult{e.child(), "trivial parameter"};
            if (e.child().kind() == Kind::Shift)
                return RuleResult{
                    FunctorExpr::shift(
                        FunctorExpr::param(e.child().child(), e.space()),
                        e.child().shift_spec()),
                    "shift hoisting"};
            return std::nullopt;
        }

        case Kind::Precompose: {
            auto a = twist_of_identity(e.child(1));
            if (a.has_value()) {
                if (*a == 0)
                    return RuleResult{e.child(0), "C_A definition"};
                return RuleResult{FunctorExpr::twist(e.child(0), *a),
                                  "C_A definition"};
            }
            return std::nullopt;
        }

        case Kind::Dual: {
            const FunctorExpr& c = e.child();
            switch (c.kind()) {
                case Kind::Identity:
                    return RuleResult{c, "Kuhn duality"};
                case Kind::Dual:
                    return RuleResult{c.child(), "Kuhn duality"};
                case Kind::Divided:
                    return RuleResult{FunctorExpr::sym(c.power()), "Kuhn duality"};
                case Kind::Sym:
                    return RuleResult{FunctorExpr::divided(c.power()), "Kuhn duality"};
                case Kind::Exterior:
                    return RuleResult{c, "Kuhn duality"};
                case Kind::Schur:
                    return RuleResult{FunctorExpr::weyl(c.diagram()), "Kuhn duality"};
                case Kind::Weyl:
                    return RuleResult{FunctorExpr::schur(c.diagram()), "Kuhn duality"};
                case Kind::Tensor: {
                    std::vector<FunctorExpr> duals;
                    for (auto& x : c.children())
                        duals.push_back(FunctorExpr::dual(x));
                    return RuleResult{FunctorExpr::tensor(std::move(duals)),
                                      "Kuhn duality"};
                }
                case Kind::Twist:
                    return RuleResult{
                        FunctorExpr::twist(FunctorExpr::dual(c.child()),
                                           c.twist_level()),
                        "Kuhn duality"};
                case Kind::Param:
                    return RuleResult{
                        FunctorExpr::param(FunctorExpr::dual(c.child()),
                                           dual_space(c.space())),
                        "Kuhn duality"};
                case Kind::Precompose:
                    return RuleResult{
                        FunctorExpr::precompose(FunctorExpr::dual(c.child(0)),
                                                FunctorExpr::dual(c.child(1))),
                        "Kuhn duality"};
                case Kind::Shift:
                    return RuleResult{
                        FunctorExpr::shift(FunctorExpr::dual(c.child()),
                                           c.shift_spec()),
                        "Kuhn duality"};
                default:
                    return std::nullopt;
            }
        }

        case Kind::KanLeft:
            // K_A^l(F) = (K_A^r(F^#))^#
            return RuleResult{
                FunctorExpr::dual(FunctorExpr::kan_right(
                    FunctorExpr::dual(e.child(0)), e.child(1))),
                "K^l via K^r"};

        case Kind::Shift: {
            if (e.shift_spec().is_zero())
                return RuleResult{e.child(), "shift normalization"};
            if (e.child().kind() == Kind::Shift)
                return RuleResult{
                    FunctorExpr::shift(e.child().child(),
                                       e.shift_spec() + e.child().shift_spec()),
                    "shift normalization"};
            return std::nullopt;
        }

        case Kind::KanRight: {
            const FunctorExpr& f = e.child(0);
            const FunctorExpr& a = e.child(1);
            auto tw = twist_of_identity(a);
            if (!tw.has_value()) return std::nullopt;
            if (*tw == 0) return RuleResult{f, "K along identity"};
            int i = *tw;

            if (f.kind() == Kind::Shift)
                return RuleResult{
                    FunctorExpr::shift(FunctorExpr::kan_right(f.child(), a),
                                       f.shift_spec()),
                    "shift hoisting"};

            if (f.kind() == Kind::Param) {
                if (f.child().kind() == Kind::Sym) {
                    // cogenerator value of the right Kan extension
                    Int ds = f.child().power();
                    Int scale = ipow(p, i);
                    if (ds % scale == 0 && ds / scale >= 1)
                        return RuleResult{
                            FunctorExpr::param(
                                FunctorExpr::sym(static_cast<int>(ds / scale)),
                                twist_grading(f.space(), p, i)),
                            "Prop 2.1"};
                    return std::nullopt;
                }
                // parameter commutes with K along a monoidal A (A = twist)
                return RuleResult{
                    FunctorExpr::param(FunctorExpr::kan_right(f.child(), a),
                                       twist_grading(f.space(), p, i)),
                    "Prop 3.1"};
            }

            if (twist_depth(f) >= i)
                return RuleResult{
                    FunctorExpr::param(untwist(f, i), engine_a_space(p, i)),
                    "Thm 3.2"};

            auto diagram = f.as_schur_diagram();
            if (diagram.has_value()) {
                if (diagram->empty())
                    return RuleResult{f, "Prop 3.7"};
                Partition peeled;
                int k = -1;
                if (try_peel_f_k(*diagram, p, i, peeled, k))
                    return RuleResult{
                        FunctorExpr::shift(schur_flavored(f, peeled),
                                           ShiftSpec::symbol(i, k)),
                        "Prop 3.7"};
            }
            return std::nullopt;
        }

        case Kind::ExtQuery: {
            const FunctorExpr& l = e.child(0);
            const FunctorExpr& r = e.child(1);
            if (r.kind() == Kind::Shift)
                return RuleResult{
                    FunctorExpr::shift(FunctorExpr::ext_query(l, r.child()),
                                       r.shift_spec()),
                    "shift hoisting"};
            if (l.kind() == Kind::Precompose)
                return RuleResult{
                    FunctorExpr::ext_query(
                        l.child(0), FunctorExpr::kan_right(r, l.child(1))),
                    "Thm 2.2"};
            int lt = twist_depth(l);
            if (lt >= 1) {
                int rt = twist_depth(r);
                int j = (rt >= 1) ? std::min(lt, rt) : lt;
                return RuleResult{
                    FunctorExpr::ext_query(
                        untwist(l, j),
                        FunctorExpr::kan_right(
                            r, FunctorExpr::twist(FunctorExpr::identity(), j))),
                    "Thm 2.2"};
            }
            return std::nullopt;
        }

        default:
            return std::nullopt;
    }
}

struct Position {
    std::vector<size_t> path;
};

FunctorExpr subexpr_at(const FunctorExpr& e, const std::vector<size_t>& path,
                       size_t depth = 0) {
    if (depth == path.size()) return e;
    return subexpr_at(e.child(path[depth]), path, depth + 1);
}

FunctorExpr replace_at(const FunctorExpr& e, const std::vector<size_t>& path,
                       const FunctorExpr& sub, size_t depth = 0) {
    if (depth == path.size()) return sub;
    return e.with_child(path[depth],
                        replace_at(e.child(path[depth]), path, sub, depth + 1));
}

void collect_positions(const FunctorExpr& e, std::vector<size_t>& path,
                       std::vector<Position>& out, RewriteStrategy strategy) {
    auto visit_children = [&](bool reversed) {
        size_t n = e.children().size();
        for (size_t idx = 0; idx < n; ++idx) {
            size_t c = reversed ? n - 1 - idx : idx;
            path.push_back(c);
            collect_positions(e.child(c), path, out, strategy);
            path.pop_back();
        }
    };
    switch (strategy) {
        case RewriteStrategy::InnermostLeftmost:
            visit_children(false);
            out.push_back({path});
            break;
        case RewriteStrategy::InnermostRightmost:
            visit_children(true);
            out.push_back({path});
            break;
        case RewriteStrategy::OutermostLeftmost:
            out.push_back({path});
            visit_children(false);
            break;
    }
}

}  // namespace

NormalizeResult normalize(const FunctorExpr& e, int p, RewriteStrategy strategy) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    e.degree(p);  // degree-consistency gate

    NormalizeResult result{e, {}};
    constexpr int step_limit = 10000;
    for (int step = 0; step < step_limit; ++step) {
        std::vector<Position> positions;
        std::vector<size_t> path;
        collect_positions(result.expr, path, positions, strategy);
        bool changed = false;
        for (auto& pos : positions) {
            FunctorExpr sub = subexpr_at(result.expr, pos.path);
            auto fired = apply_rule(sub, p);
            if (fired.has_value()) {
                FunctorExpr next = replace_at(result.expr, pos.path, fired->expr);
                result.trace.push_back(
                    {fired->rule, result.expr.to_string(), next.to_string()});
                result.expr = std::move(next);
                changed = true;
                break;
            }
        }
        if (!changed) return result;
    }
    throw std::logic_error("rewrite did not terminate within the step limit");
}

FunctorExpr kan_value_conditional(const FunctorExpr& f, int p, int i,
                                  bool hypothesis) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (i < 1) throw std::invalid_argument("twist level i must be >= 1");
    auto diagram = f.as_schur_diagram();
    if (diagram.has_value()) {
        if (diagram->empty()) return f;
        Partition peeled;
        int k = -1;
        if (try_peel_f_k(*diagram, p, i, peeled, k))
            return FunctorExpr::shift(FunctorExpr::schur(peeled),
                                      ShiftSpec::symbol(i, k));
    }
    if (!hypothesis)
        throw std::invalid_argument(
            "Ext-coinvariance hypothesis not asserted and input is outside "
            "the recognized family: " + f.to_string());
    return FunctorExpr::sym_tensor_ext(f, i);
}

namespace {

// Multidegree of a tensor of divided powers (and identity factors), if the
// left side of a normalized query has that shape.
std::optional<Partition> divided_multidegree(const FunctorExpr& l) {
    std::vector<int> powers;
    auto add = [&](const FunctorExpr& f) -> bool {
        if (f.kind() == Kind::Divided) { powers.push_back(f.power()); return true; }
        if (f.kind() == Kind::Identity) { powers.push_back(1); return true; }
        return false;
    };
    if (l.kind() == Kind::Tensor) {
        for (auto& c : l.children())
            if (!add(c)) return std::nullopt;
    } else if (l.kind() == Kind::Schur && l.diagram().empty()) {
        return Partition();
    } else if (!add(l)) {
        return std::nullopt;
    }
    std::sort(powers.begin(), powers.end(), std::greater<int>());
    return Partition(std::move(powers));
}

}  // namespace

ExtAnswer evaluate_ext_query(const FunctorExpr& e, int p) {
    NormalizeResult normalized = normalize(e, p);
    FunctorExpr nf = normalized.expr;

    ShiftSpec shift;
    while (nf.kind() == Kind::Shift) {
        shift = shift + nf.shift_spec();
        nf = nf.child();
    }
    if (nf.kind() != Kind::ExtQuery)
        throw unsupported_functor("not an Ext query after normalization: " +
                                  nf.to_string());

    const FunctorExpr& l = nf.child(0);
    FunctorExpr g = nf.child(1);
    GradedSpace u = unit_space();
    ShiftSpec inner;
    if (g.kind() == Kind::Param) {
        u = g.space();
        g = g.child();
    }
    while (g.kind() == Kind::Shift) {
        inner = inner + g.shift_spec();
        g = g.child();
    }
    shift = shift + inner;

    auto left_multidegree = divided_multidegree(l);
    if (left_multidegree.has_value()) {
        PoincarePoly poincare = multidegree_component(*left_multidegree, g, u);
        std::string provenance = shift.is_symbolic() ? "Prop 3.7" : "Cor 3.4";
        return ExtAnswer{poincare, shift, std::nullopt, provenance};
    }

    if (l.kind() == Kind::Weyl) {
        auto lambda = g.as_schur_diagram();
        if (!lambda.has_value())
            throw unsupported_functor(
                "right side of the normalized query is not a Schur functor: " +
                g.to_string());
        PoincarePoly poincare = weyl_schur_multiplicity(l.diagram(), *lambda, u);
        std::string provenance = shift.is_symbolic() ? "Cor 3.8" : "Cor 3.5";
        return ExtAnswer{poincare, shift, std::nullopt, provenance};
    }

    throw unsupported_functor("normal form not supported for evaluation: " +
                              nf.to_string());
}

}  // namespace frobext
