#pragma once

#include <vector>

#include "frobext/graded.hpp"
#include "frobext/partition.hpp"
#include "frobext/poly.hpp"
#include "frobext/symchar.hpp"

namespace frobext {
namespace oracle {

/// A concrete Sigma_d-module with a degree-labeled basis and exact rational
/// matrices for the adjacent-transposition generators. The generator
/// matrices are checked against the Coxeter relations on construction.
struct ExplicitModule {
    int d = 1;
    std::vector<int> degrees;  // one per basis vector
    // generators[g] is the matrix of s_{g+1} = (g+1, g+2); column-major
    // action: image of basis j is sum_i M[i][j] basis_i.
    std::vector<std::vector<std::vector<Rational>>> generators;

    int dimension() const { return static_cast<int>(degrees.size()); }
};

/// Specht module over the rationals with the standard-polytabloid basis.
/// Resource-guarded to d <= 6.
ExplicitModule specht_module(const Partition& lambda);

/// Graded trace of any permutation of cycle type rho, computed from the
/// generator matrices and cross-checked on two representatives.
Poly character_from_module(const ExplicitModule& m, const CycleType& rho);

/// Direct two-sided projector computation of the graded multiplicity of
/// Sp_mu inside the Sp_lambda-isotypic layer of U^{(x)d} (x) k[Sigma_d].
/// Resource-guarded to d <= 3. All character data used here comes from the
/// explicit Specht matrices, independent of the recursion in symchar.
PoincarePoly graded_isotypic_trace(const Partition& mu, const Partition& lambda,
                                   const GradedSpace& u, int d);

}  // namespace oracle
}  // namespace frobext
