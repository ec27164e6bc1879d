#include "frobext/extcalc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace frobext {

namespace {

// --- multivariate symmetric-polynomial engine over the graded alphabet ----
//
// Monomials in x_1..x_n with Poly coefficients in t, truncated against a
// fixed exponent profile: any monomial with x_m-exponent above profile[m]
// can never contribute to the coefficient of x^lambda and is dropped.

using Exponent = std::vector<int>;

struct GradedSym {
    std::map<Exponent, Poly> terms;

    static GradedSym zero() { return {}; }

    static GradedSym one(int n) {
        GradedSym g;
        g.terms[Exponent(n, 0)] = Poly::constant(1);
        return g;
    }

    void add_term(const Exponent& e, const Poly& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    GradedSym operator+(const GradedSym& o) const {
        GradedSym r = *this;
        for (auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }

    GradedSym operator-() const {
        GradedSym r;
        for (auto& [e, c] : terms) r.terms[e] = Poly() - c;
        return r;
    }

    GradedSym multiply(const GradedSym& o, const Exponent& profile) const {
        GradedSym r;
        for (auto& [e1, c1] : terms) {
            for (auto& [e2, c2] : o.terms) {
                Exponent e(e1.size());
                bool keep = true;
                for (size_t m = 0; m < e.size(); ++m) {
                    e[m] = e1[m] + e2[m];
                    if (e[m] > profile[m]) { keep = false; break; }
                }
                if (keep) r.add_term(e, c1 * c2);
            }
        }
        return r;
    }
};

// Letters of the alphabet: one per (slot, degree) with multiplicity.
struct Letter {
    int slot;
    int degree;
    Int multiplicity;
};

std::vector<Letter> alphabet(int n, const GradedSpace& u) {
    std::vector<Letter> letters;
    for (int m = 0; m < n; ++m)
        for (auto& [e, c] : u.poincare.poly().coefficients())
            letters.push_back({m, e, c});
    return letters;
}

Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (Int j = 1; j <= k; ++j) r = checked_mul(r, n - k + j) / j;
    return r;
}

// Complete homogeneous h_0..h_max over the alphabet:
// prod over letters of (1 - x_m t^e z)^{-mult}, coefficients of z^q.
std::vector<GradedSym> h_basis(int n, const GradedSpace& u, int max,
                               const Exponent& profile) {
    std::vector<GradedSym> h(max + 1, GradedSym::zero());
    h[0] = GradedSym::one(n);
    for (auto& letter : alphabet(n, u)) {
        std::vector<GradedSym> next(max + 1, GradedSym::zero());
        for (int q = 0; q <= max; ++q) {
            for (int use = 0; use <= q; ++use) {
                if (use > profile[letter.slot]) break;
                Int count = binomial(letter.multiplicity + use - 1, use);
                if (count == 0) continue;
                Exponent e(n, 0);
                e[letter.slot] = use;
                GradedSym term;
                term.terms[e] = Poly::monomial(letter.degree * use, count);
                next[q] = next[q] + h[q - use].multiply(term, profile);
            }
        }
        h = std::move(next);
    }
    return h;
}

// Elementary e_0..e_max: prod over letters of (1 + x_m t^e z)^{mult}.
std::vector<GradedSym> e_basis(int n, const GradedSpace& u, int max,
                               const Exponent& profile) {
    std::vector<GradedSym> el(max + 1, GradedSym::zero());
    el[0] = GradedSym::one(n);
    for (auto& letter : alphabet(n, u)) {
        std::vector<GradedSym> next(max + 1, GradedSym::zero());
        for (int q = 0; q <= max; ++q) {
            for (int use = 0; use <= q; ++use) {
                if (use > profile[letter.slot]) break;
                Int count = binomial(letter.multiplicity, use);
                if (count == 0) continue;
                Exponent e(n, 0);
                e[letter.slot] = use;
                GradedSym term;
                term.terms[e] = Poly::monomial(letter.degree * use, count);
                next[q] = next[q] + el[q - use].multiply(term, profile);
            }
        }
        el = std::move(next);
    }
    return el;
}

struct CharContext {
    int n;
    GradedSpace u;
    Exponent profile;
    std::vector<GradedSym> h;  // filled lazily up to the needed bound
    std::vector<GradedSym> e;

    const GradedSym& h_at(int a) {
        if (a >= static_cast<int>(h.size()))
            h = h_basis(n, u, a, profile);
        return h[a];
    }
    const GradedSym& e_at(int a) {
        if (a >= static_cast<int>(e.size()))
            e = e_basis(n, u, a, profile);
        return e[a];
    }
};

// Jacobi-Trudi: s_nu = det(h_{nu_r - r + c}), 0-indexed r,c.
GradedSym schur_char(CharContext& ctx, const Partition& nu) {
    int l = nu.length();
    if (l == 0) return GradedSym::one(ctx.n);
    // prewarm the h cache so references stay valid through the recursion
    ctx.h_at(nu.parts()[0] + l);
    // Laplace expansion along the first row, recursing on column subsets.
    std::vector<int> cols(l);
    for (int c = 0; c < l; ++c) cols[c] = c;
    auto minor = [&](auto&& self, int row, std::vector<int> use_cols) -> GradedSym {
        if (use_cols.empty()) return GradedSym::one(ctx.n);
        GradedSym total = GradedSym::zero();
        for (size_t ci = 0; ci < use_cols.size(); ++ci) {
            int c = use_cols[ci];
            int index = nu.parts()[row] - row + c;
            if (index < 0) continue;
            const GradedSym& entry = ctx.h_at(index);
            if (entry.terms.empty()) continue;
            std::vector<int> rest = use_cols;
            rest.erase(rest.begin() + ci);
            GradedSym sub = self(self, row + 1, std::move(rest));
            GradedSym product = entry.multiply(sub, ctx.profile);
            total = (ci % 2 == 0) ? total + product : total + (-product);
        }
        return total;
    };
    return minor(minor, 0, cols);
}

GradedSym functor_char(CharContext& ctx, const FunctorExpr& f) {
    using Kind = FunctorExpr::Kind;
    switch (f.kind()) {
        case Kind::Identity: return ctx.h_at(1);
        case Kind::Divided:
        case Kind::Sym: return ctx.h_at(f.power());
        case Kind::Exterior: return ctx.e_at(f.power());
        case Kind::Schur:
        case Kind::Weyl: return schur_char(ctx, f.diagram());
        case Kind::Tensor: {
            GradedSym r = GradedSym::one(ctx.n);
            for (auto& c : f.children())
                r = r.multiply(functor_char(ctx, c), ctx.profile);
            return r;
        }
        default:
            throw unsupported_functor(
                "functor outside the supported family {I, D^a, S^a, L^a, "
                "Schur, Weyl, tensor products}: " + f.to_string());
    }
}

void require_supported_family(const FunctorExpr& f) {
    using Kind = FunctorExpr::Kind;
    switch (f.kind()) {
        case Kind::Identity:
        case Kind::Divided:
        case Kind::Sym:
        case Kind::Exterior:
        case Kind::Schur:
        case Kind::Weyl:
            return;
        case Kind::Tensor:
            for (auto& c : f.children()) require_supported_family(c);
            return;
        default:
            throw unsupported_functor(
                "functor outside the supported family {I, D^a, S^a, L^a, "
                "Schur, Weyl, tensor products}: " + f.to_string());
    }
}

void check_p_prime(int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

}  // namespace

PoincarePoly multidegree_component(const Partition& lambda, const FunctorExpr& f,
                                   const GradedSpace& u) {
    require_supported_family(f);
    Int deg = f.degree(2);  // p irrelevant for untwisted expressions
    if (deg != lambda.weight())
        throw std::invalid_argument("degree mismatch between functor (" +
                                    std::to_string(deg) + ") and multidegree |" +
                                    lambda.to_string() + "|");
    int n = lambda.length();
    CharContext ctx{n, u, lambda.parts(), {}, {}};
    GradedSym full = functor_char(ctx, f);
    Exponent target = lambda.parts();
    auto it = full.terms.find(target);
    if (it == full.terms.end()) return PoincarePoly();
    return PoincarePoly(it->second);
}

PoincarePoly weyl_schur_multiplicity(const Partition& mu, const Partition& lambda,
                                     const GradedSpace& u) {
    if (mu.weight() != lambda.weight())
        throw std::invalid_argument("weight mismatch: |mu| = " +
                                    std::to_string(mu.weight()) + ", |lambda| = " +
                                    std::to_string(lambda.weight()));
    int d = mu.weight();
    if (d == 0) return PoincarePoly::one();
    ClassFunction chi = tensor_power_character(u, d).twisted_by_character(lambda);
    return graded_multiplicity(mu, chi);
}

ExtAnswer ext_divided_vs_twisted(const Partition& lambda, const FunctorExpr& f,
                                 int p, int i) {
    check_p_prime(p);
    if (i < 0) throw std::invalid_argument("twist level i must be >= 0");
    return ExtAnswer{multidegree_component(lambda, f, a_space(p, i)),
                     ShiftSpec(), std::nullopt, "Cor 3.4"};
}

ExtAnswer ext_weyl_schur_twisted(const Partition& mu, const Partition& lambda,
                                 int p, int i) {
    check_p_prime(p);
    if (i < 0) throw std::invalid_argument("twist level i must be >= 0");
    return ExtAnswer{weyl_schur_multiplicity(mu, lambda, a_space(p, i)),
                     ShiftSpec(), std::nullopt, "Cor 3.5"};
}

ExtAnswer ext_untwisted_from_fk(const Partition& lambda, int p, int i, int k) {
    check_p_prime(p);
    if (i <= 0) throw std::invalid_argument("twist level i must be > 0");
    if (k < 0 || k >= p)
        throw std::out_of_range("runner index k must satisfy 0 <= k <= p-1");
    ShiftSpec shift =
        lambda.empty() ? ShiftSpec() : ShiftSpec::symbol(i, k);
    return ExtAnswer{PoincarePoly(Poly::constant(specht_dim(lambda))), shift,
                     lambda, "Prop 3.7"};
}

ExtAnswer ext_weyl_vs_fk_schur(const Partition& mu, const Partition& lambda,
                               int p, int i, int j, int k) {
    check_p_prime(p);
    if (i <= 0) throw std::invalid_argument("twist level i must be > 0");
    if (j < 0) throw std::invalid_argument("twist level j must be >= 0");
    if (k < 0 || k >= p)
        throw std::out_of_range("runner index k must satisfy 0 <= k <= p-1");
    GradedSpace u = twist_grading(a_space(p, j), p, i);
    ShiftSpec shift = mu.empty() ? ShiftSpec() : ShiftSpec::symbol(i, k);
    return ExtAnswer{weyl_schur_multiplicity(mu, lambda, u), shift, std::nullopt,
                     "Cor 3.8"};
}

bool consistency_cor34_vs_cor35(const Partition& nu, int p, int i) {
    int d = nu.weight();
    Partition row = d == 0 ? Partition() : Partition{d};
    PoincarePoly via_multidegree =
        multidegree_component(row, FunctorExpr::schur(nu), a_space(p, i));
    PoincarePoly via_characters =
        weyl_schur_multiplicity(row, nu, a_space(p, i));
    return via_multidegree == via_characters;
}

}  // namespace frobext
