#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frobext/int_util.hpp"

namespace frobext {

/// Integer-coefficient polynomial in one grading variable t with
/// nonnegative degrees. Zero coefficients are never stored.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(Int c) { return monomial(0, c); }
    static Poly monomial(int degree, Int coeff);

    bool is_zero() const { return coeffs_.empty(); }
    Int coefficient(int degree) const;
    int degree() const;  // -1 for the zero polynomial
    Int evaluate_at_one() const;

    const std::map<int, Int>& coefficients() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(Int c) const;
    /// t -> t^m; m >= 1.
    Poly substitute_power(int m) const;
    /// Multiply by t^s, s >= 0.
    Poly shifted(int s) const;
    /// Exact division of every coefficient; throws if any remainder is nonzero.
    Poly divided_exact(Int d) const;

    bool has_negative_coefficient() const;

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;
    std::string to_latex() const;

private:
    void set(int degree, Int coeff);

    std::map<int, Int> coeffs_;
};

/// Poincare polynomial of a graded vector space: a Poly whose coefficients
/// are all nonnegative. The universal answer format.
class PoincarePoly {
public:
    PoincarePoly() = default;
    explicit PoincarePoly(Poly p);

    static PoincarePoly one() { return PoincarePoly(Poly::constant(1)); }

    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    Int dimension() const { return poly_.evaluate_at_one(); }
    Int coefficient(int degree) const { return poly_.coefficient(degree); }

    bool operator==(const PoincarePoly& o) const { return poly_ == o.poly_; }
    bool operator!=(const PoincarePoly& o) const { return poly_ != o.poly_; }

    std::string to_string() const { return poly_.to_string(); }
    std::string to_latex() const { return poly_.to_latex(); }

    /// Degree-ascending [degree, coefficient] pairs.
    std::vector<std::pair<int, Int>> pairs() const;

private:
    Poly poly_;
};

}  // namespace frobext
