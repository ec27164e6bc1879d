#include "frobext/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace frobext {
namespace oracle {

namespace {

using Matrix = std::vector<std::vector<Rational>>;
using Perm = std::vector<int>;  // one-line, 0-indexed: x -> perm[x]

Matrix identity_matrix(int n) {
    Matrix m(n, std::vector<Rational>(n));
    for (int j = 0; j < n; ++j) m[j][j] = Rational(1);
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    int n = static_cast<int>(a.size());
    Matrix r(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

bool is_identity(const Matrix& m) {
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] != Rational(i == j ? 1 : 0)) return false;
    return true;
}

Perm inverse(const Perm& p) {
    Perm inv(p.size());
    for (size_t x = 0; x < p.size(); ++x) inv[p[x]] = static_cast<int>(x);
    return inv;
}

Perm compose(const Perm& a, const Perm& b) {  // apply b first, then a
    Perm r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

std::vector<Perm> all_permutations(int d) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Partition cycle_type_of(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> cycles;
    for (size_t start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        size_t x = start;
        while (!seen[x]) {
            seen[x] = true;
            x = p[x];
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    return Partition(std::move(cycles));
}

// Canonical representative: consecutive blocks, one cycle per part.
Perm canonical_of_cycle_type(const CycleType& rho) {
    Perm p(rho.d());
    int base = 0;
    for (int len : rho.cycles().parts()) {
        for (int off = 0; off < len; ++off)
            p[base + off] = base + (off + 1) % len;
        base += len;
    }
    return p;
}

// sigma as a product of adjacent transpositions (indices into generators).
std::vector<int> adjacent_word(const Perm& sigma) {
    Perm w = sigma;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t j = 0; j + 1 < w.size(); ++j) {
            if (w[j] > w[j + 1]) {
                std::swap(w[j], w[j + 1]);
                word.push_back(static_cast<int>(j));
                moved = true;
            }
        }
    }
    return word;
}

Matrix matrix_of_permutation(const ExplicitModule& m, const Perm& sigma) {
    Matrix result = identity_matrix(m.dimension());
    for (int g : adjacent_word(sigma)) result = multiply(m.generators[g], result);
    return result;
}

Poly graded_trace(const ExplicitModule& m, const Matrix& mat) {
    std::map<int, Rational> accum;
    for (int b = 0; b < m.dimension(); ++b) accum[m.degrees[b]] += mat[b][b];
    Poly out;
    for (auto& [deg, value] : accum) {
        if (!value.is_integer())
            throw std::logic_error("non-integral graded trace");
        out += Poly::monomial(deg, value.as_integer());
    }
    return out;
}

// --- Specht module construction over tabloids -------------------------------

struct TabloidSpace {
    int d;
    std::vector<std::vector<int>> tabloids;  // row_of value -> row index
    std::map<std::vector<int>, int> index;
};

TabloidSpace enumerate_tabloids(const Partition& lambda) {
    TabloidSpace space;
    space.d = lambda.weight();
    std::vector<int> row_of(space.d, -1);
    std::vector<int> remaining(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) remaining[r] = lambda.parts()[r];
    auto rec = [&](auto&& self, int value) -> void {
        if (value == space.d) {
            space.index[row_of] = static_cast<int>(space.tabloids.size());
            space.tabloids.push_back(row_of);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            if (remaining[r] == 0) continue;
            --remaining[r];
            row_of[value] = r;
            self(self, value + 1);
            ++remaining[r];
            row_of[value] = -1;
        }
    };
    rec(rec, 0);
    return space;
}

// cells[r][c] = value placed at row r, column c (0-indexed values).
using Tableau = std::vector<std::vector<int>>;

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    int d = lambda.weight();
    Tableau cells(lambda.length());
    for (int r = 0; r < lambda.length(); ++r)
        cells[r].assign(lambda.parts()[r], -1);
    std::vector<int> filled(lambda.length(), 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, int value) -> void {
        if (value == d) {
            out.push_back(cells);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            int c = filled[r];
            if (c >= lambda.parts()[r]) continue;
            if (r > 0 && filled[r - 1] <= c) continue;  // column must grow downward
            cells[r][c] = value;
            ++filled[r];
            self(self, value + 1);
            --filled[r];
            cells[r][c] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

// Polytabloid of t as a vector over the tabloid basis.
std::vector<Int> polytabloid(const TabloidSpace& space, const Partition& lambda,
                             const Tableau& t) {
    Partition conj = conjugate(lambda);
    int columns = lambda.empty() ? 0 : lambda.parts()[0];
    std::vector<std::vector<int>> column_values(columns);
    for (int c = 0; c < columns; ++c)
        for (int r = 0; r < conj.parts()[c]; ++r)
            column_values[c].push_back(t[r][c]);

    std::vector<Int> vec(space.tabloids.size(), 0);
    // iterate over the column group: independent permutations per column
    std::vector<std::vector<int>> perms(columns);
    auto rec = [&](auto&& self, int c, int sign,
                   std::vector<int>& image_of) -> void {
        if (c == columns) {
            std::vector<int> row_of(space.d, -1);
            for (int r = 0; r < lambda.length(); ++r)
                for (int col = 0; col < lambda.parts()[r]; ++col)
                    row_of[image_of[t[r][col]]] = r;
            vec[space.index.at(row_of)] += sign;
            return;
        }
        std::vector<int> order = column_values[c];
        std::sort(order.begin(), order.end());
        do {
            int inversions = 0;
            for (size_t a = 0; a < order.size(); ++a)
                for (size_t b = a + 1; b < order.size(); ++b)
                    if (order[a] > order[b]) ++inversions;
            for (size_t pos = 0; pos < order.size(); ++pos) {
                std::vector<int> sorted = column_values[c];
                std::sort(sorted.begin(), sorted.end());
                image_of[sorted[pos]] = order[pos];
            }
            self(self, c + 1, (inversions % 2 == 0) ? sign : -sign, image_of);
        } while (std::next_permutation(order.begin(), order.end()));
    };
    std::vector<int> image_of(space.d);
    std::iota(image_of.begin(), image_of.end(), 0);
    rec(rec, 0, 1, image_of);
    return vec;
}

// Solve B x = v for several right-hand sides; B has full column rank.
// Throws if any v is outside the column span.
std::vector<std::vector<Rational>> solve_in_basis(
    const std::vector<std::vector<Int>>& basis_columns,
    const std::vector<std::vector<Int>>& rhs_columns) {
    int rows = basis_columns.empty() ? 0 : static_cast<int>(basis_columns[0].size());
    int dim = static_cast<int>(basis_columns.size());
    int nrhs = static_cast<int>(rhs_columns.size());

    std::vector<std::vector<Rational>> aug(rows,
                                           std::vector<Rational>(dim + nrhs));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < dim; ++c) aug[r][c] = Rational(basis_columns[c][r]);
        for (int c = 0; c < nrhs; ++c)
            aug[r][dim + c] = Rational(rhs_columns[c][r]);
    }

    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < dim && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (!aug[r][col].is_zero()) { pivot = r; break; }
        if (pivot == -1)
            throw std::logic_error("polytabloid basis is rank-deficient");
        std::swap(aug[row], aug[pivot]);
        Rational inv = Rational(1) / aug[row][col];
        for (int c = col; c < dim + nrhs; ++c) aug[row][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || aug[r][col].is_zero()) continue;
            Rational factor = aug[r][col];
            for (int c = col; c < dim + nrhs; ++c)
                aug[r][c] -= factor * aug[row][c];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    // consistency: all remaining rows of the rhs block must be zero
    for (int r = dim; r < rows; ++r)
        for (int c = 0; c < nrhs; ++c)
            if (!aug[r][dim + c].is_zero())
                throw std::logic_error("vector outside the polytabloid span");

    std::vector<std::vector<Rational>> solution(nrhs,
                                                std::vector<Rational>(dim));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < nrhs; ++c) solution[c][r] = aug[r][dim + c];
    return solution;
}

void verify_coxeter(const ExplicitModule& m) {
    int gens = static_cast<int>(m.generators.size());
    for (int g = 0; g < gens; ++g) {
        if (!is_identity(multiply(m.generators[g], m.generators[g])))
            throw std::logic_error("generator is not an involution");
        if (g + 1 < gens) {
            Matrix braid = multiply(m.generators[g], m.generators[g + 1]);
            if (!is_identity(multiply(braid, multiply(braid, braid))))
                throw std::logic_error("braid relation fails");
        }
        for (int h = g + 2; h < gens; ++h) {
            Matrix gh = multiply(m.generators[g], m.generators[h]);
            Matrix hg = multiply(m.generators[h], m.generators[g]);
            if (gh != hg) throw std::logic_error("commuting relation fails");
        }
    }
}

}  // namespace

ExplicitModule specht_module(const Partition& lambda) {
    int d = lambda.weight();
    if (d > 6)
        throw std::invalid_argument("resource guard: specht_module needs d <= 6");

    ExplicitModule m;
    m.d = d;
    if (d == 0) {
        m.degrees = {0};
        return m;
    }

    TabloidSpace space = enumerate_tabloids(lambda);
    std::vector<Tableau> tableaux = standard_tableaux(lambda);
    std::vector<std::vector<Int>> basis;
    basis.reserve(tableaux.size());
    for (auto& t : tableaux) basis.push_back(polytabloid(space, lambda, t));

    m.degrees.assign(basis.size(), 0);
    for (int g = 0; g + 1 < d; ++g) {
        // image of each basis polytabloid under the transposition (g+1,g+2)
        std::vector<std::vector<Int>> images;
        images.reserve(basis.size());
        for (auto& vec : basis) {
            std::vector<Int> image(vec.size(), 0);
            for (size_t tab = 0; tab < vec.size(); ++tab) {
                if (vec[tab] == 0) continue;
                std::vector<int> row_of = space.tabloids[tab];
                std::swap(row_of[g], row_of[g + 1]);
                image[space.index.at(row_of)] += vec[tab];
            }
            images.push_back(std::move(image));
        }
        auto coords = solve_in_basis(basis, images);
        Matrix gen(basis.size(), std::vector<Rational>(basis.size()));
        for (size_t col = 0; col < coords.size(); ++col)
            for (size_t r = 0; r < coords[col].size(); ++r)
                gen[r][col] = coords[col][r];
        m.generators.push_back(std::move(gen));
    }
    verify_coxeter(m);
    return m;
}

Poly character_from_module(const ExplicitModule& m, const CycleType& rho) {
    if (rho.d() != m.d)
        throw std::invalid_argument("cycle type degree mismatch");
    if (m.d == 0) return Poly::constant(1);

    Perm sigma = canonical_of_cycle_type(rho);
    Poly trace = graded_trace(m, matrix_of_permutation(m, sigma));

    // second representative: conjugate by the order reversal
    Perm rev(m.d);
    for (int x = 0; x < m.d; ++x) rev[x] = m.d - 1 - x;
    Perm conjugated = compose(rev, compose(sigma, rev));
    Poly trace2 = graded_trace(m, matrix_of_permutation(m, conjugated));
    if (trace != trace2)
        throw std::logic_error("trace differs between conjugate representatives");
    return trace;
}

PoincarePoly graded_isotypic_trace(const Partition& mu, const Partition& lambda,
                                   const GradedSpace& u, int d) {
    if (d < 1 || d > 3)
        throw std::invalid_argument("resource guard: graded_isotypic_trace needs 1 <= d <= 3");
    if (mu.weight() != d || lambda.weight() != d)
        throw std::invalid_argument("weight mismatch");

    ExplicitModule mu_mod = specht_module(mu);
    ExplicitModule lam_mod = specht_module(lambda);
    std::map<Partition, Int> chi_mu, chi_lambda;
    for (auto& rho : cycle_types_of(d)) {
        chi_mu[rho.cycles()] =
            character_from_module(mu_mod, rho).coefficient(0);
        chi_lambda[rho.cycles()] =
            character_from_module(lam_mod, rho).coefficient(0);
    }

    // graded basis of U^{(x)d} (x) k[Sigma_d]
    std::vector<int> letter_degrees;
    for (auto& [deg, mult] : u.poincare.poly().coefficients())
        for (Int c = 0; c < mult; ++c) letter_degrees.push_back(deg);
    int dim_u = static_cast<int>(letter_degrees.size());
    std::vector<std::vector<int>> words;
    std::vector<int> word(d, 0);
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == d) {
            words.push_back(word);
            return;
        }
        for (int v = 0; v < dim_u; ++v) {
            word[slot] = v;
            self(self, slot + 1);
        }
    };
    rec(rec, 0);

    std::vector<Perm> perms = all_permutations(d);

    // accumulate sum over (sigma, tau) of chi_mu(sigma) chi_lambda(tau)
    // times the number of fixed graded basis vectors of L_sigma R_tau
    std::map<int, Int> accum;
    for (auto& sigma : perms) {
        Perm sigma_inv = inverse(sigma);
        Int cmu = chi_mu.at(cycle_type_of(sigma));
        for (auto& tau : perms) {
            Int clam = chi_lambda.at(cycle_type_of(tau));
            Int weight = checked_mul(cmu, clam);
            if (weight == 0) continue;
            for (auto& w : words) {
                // slot action: slot m receives the vector from slot sigma^{-1}(m)
                bool word_fixed = true;
                for (int m = 0; m < d; ++m) {
                    if (w[m] != w[sigma_inv[m]]) { word_fixed = false; break; }
                }
                if (!word_fixed) continue;
                int word_degree = 0;
                for (int m = 0; m < d; ++m) word_degree += letter_degrees[w[m]];
                for (auto& pi : perms) {
                    Perm moved = compose(sigma, compose(pi, tau));
                    if (moved == pi)
                        accum[word_degree] = checked_add(accum[word_degree], weight);
                }
            }
        }
    }

    Poly result;
    Int dfact = factorial(d);
    Int denominator = checked_mul(dfact, dfact);
    for (auto& [deg, value] : accum) {
        if (value % denominator != 0)
            throw std::domain_error("projector trace is not integral");
        result += Poly::monomial(deg, value / denominator);
    }
    return PoincarePoly(result);
}

}  // namespace oracle
}  // namespace frobext
