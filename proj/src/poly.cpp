#include "frobext/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace frobext {

Poly Poly::monomial(int degree, Int coeff) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    Poly p;
    p.set(degree, coeff);
    return p;
}

void Poly::set(int degree, Int coeff) {
    if (coeff == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = coeff;
}

Int Poly::coefficient(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? 0 : it->second;
}

int Poly::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

Int Poly::evaluate_at_one() const {
    Int s = 0;
    for (auto& [e, c] : coeffs_) s = checked_add(s, c);
    return s;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [e, c] : o.coeffs_) r.set(e, checked_add(r.coefficient(e), c));
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (auto& [e, c] : o.coeffs_) r.set(e, checked_add(r.coefficient(e), -c));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [e1, c1] : coeffs_)
        for (auto& [e2, c2] : o.coeffs_)
            r.set(e1 + e2, checked_add(r.coefficient(e1 + e2), checked_mul(c1, c2)));
    return r;
}

Poly Poly::scaled(Int c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& [e, v] : coeffs_) r.set(e, checked_mul(v, c));
    return r;
}

Poly Poly::substitute_power(int m) const {
    if (m < 1) throw std::invalid_argument("substitution power must be >= 1");
    Poly r;
    for (auto& [e, c] : coeffs_) r.set(e * m, c);
    return r;
}

Poly Poly::shifted(int s) const {
    if (s < 0) throw std::invalid_argument("negative shift on a polynomial");
    Poly r;
    for (auto& [e, c] : coeffs_) r.set(e + s, c);
    return r;
}

Poly Poly::divided_exact(Int d) const {
    if (d == 0) throw std::domain_error("division by zero");
    Poly r;
    for (auto& [e, c] : coeffs_) {
        if (c % d != 0)
            throw std::domain_error("coefficient " + std::to_string(c) +
                                    " at degree " + std::to_string(e) +
                                    " is not divisible by " + std::to_string(d));
        r.set(e, c / d);
    }
    return r;
}

bool Poly::has_negative_coefficient() const {
    for (auto& [e, c] : coeffs_)
        if (c < 0) return true;
    return false;
}

namespace {

std::string term_string(int degree, Int coeff, bool latex) {
    std::ostringstream os;
    Int a = coeff < 0 ? -coeff : coeff;
    if (degree == 0) {
        os << a;
    } else {
        if (a != 1) os << a << (latex ? " " : " ");
        os << "t";
        if (degree != 1) {
            if (latex)
                os << "^{" << degree << "}";
            else
                os << "^" << degree;
        }
    }
    return os.str();
}

std::string render(const std::map<int, Int>& coeffs, bool latex) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeffs) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << term_string(e, c, latex);
    }
    return os.str();
}

}  // namespace

std::string Poly::to_string() const { return render(coeffs_, false); }
std::string Poly::to_latex() const { return render(coeffs_, true); }

PoincarePoly::PoincarePoly(Poly p) : poly_(std::move(p)) {
    if (poly_.has_negative_coefficient())
        throw std::domain_error("Poincare polynomial with negative coefficient: " +
                                poly_.to_string());
}

std::vector<std::pair<int, Int>> PoincarePoly::pairs() const {
    std::vector<std::pair<int, Int>> v;
    for (auto& [e, c] : poly_.coefficients()) v.emplace_back(e, c);
    return v;
}

}  // namespace frobext
