#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobext/poly.hpp"
#include "frobext/symchar.hpp"

namespace frobext {

/// A graded vector space presented by its Poincare polynomial.
struct GradedSpace {
    PoincarePoly poincare;
    std::string label;

    Int dimension() const { return poincare.dimension(); }
    bool operator==(const GradedSpace& o) const {
        return poincare == o.poincare && label == o.label;
    }
};

/// Grading shift: an integer offset plus a formal sum of symbolic markers
/// h(i,k) whose value is configurable, never assumed. Symbols compose
/// additively.
struct ShiftSymbol {
    int i = 0;
    int k = 0;
    bool operator==(const ShiftSymbol& o) const { return i == o.i && k == o.k; }
    bool operator<(const ShiftSymbol& o) const {
        return i != o.i ? i < o.i : k < o.k;
    }
};

class ShiftSpec {
public:
    ShiftSpec() = default;
    static ShiftSpec value(Int n);
    static ShiftSpec symbol(int i, int k);

    bool is_zero() const { return offset_ == 0 && symbols_.empty(); }
    bool is_symbolic() const { return !symbols_.empty(); }
    Int offset() const { return offset_; }
    const std::vector<ShiftSymbol>& symbols() const { return symbols_; }

    ShiftSpec operator+(const ShiftSpec& o) const;

    /// Replace symbol (i,k) everywhere by an explicit value.
    ShiftSpec with_override(int i, int k, Int value) const;
    /// Replace every symbol by the same explicit value.
    ShiftSpec with_override_all(Int value) const;

    bool operator==(const ShiftSpec& o) const {
        return offset_ == o.offset_ && symbols_ == o.symbols_;
    }
    bool operator!=(const ShiftSpec& o) const { return !(*this == o); }

    /// "0", "3", "h(1,0)", "h(1,0)+h(2,1)+3"
    std::string to_string() const;

private:
    Int offset_ = 0;
    std::vector<ShiftSymbol> symbols_;  // kept sorted
};

/// A_i: one-dimensional in even degrees 0, 2, ..., 2p^i - 2.
GradedSpace a_space(int p, int i);

/// S_i: one-dimensional in degrees 0, 1, ..., p^i - 1.
GradedSpace s_space(int p, int i);

/// Frobenius twist of the grading: degree e goes to p^i * e.
GradedSpace twist_grading(const GradedSpace& u, int p, int i);

/// Linear dual, reported with nonnegative grading: same Poincare polynomial.
GradedSpace dual_space(const GradedSpace& u);

/// Graded trace of the place-permutation action of Sigma_d on U^{tensor d}:
/// value at rho is prod_j P_U(t^{rho_j}).
ClassFunction tensor_power_character(const GradedSpace& u, int d);

/// Graded character of U^{tensor d} (x) k[Sigma_d] with the diagonal action:
/// free over k[Sigma_d], so supported at the identity class with value
/// d! * P_U(t)^d.
ClassFunction free_module_character(const GradedSpace& u, int d);

}  // namespace frobext
