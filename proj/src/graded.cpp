#include "frobext/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frobext {

ShiftSpec ShiftSpec::value(Int n) {
    ShiftSpec s;
    s.offset_ = n;
    return s;
}

ShiftSpec ShiftSpec::symbol(int i, int k) {
    ShiftSpec s;
    s.symbols_.push_back({i, k});
    return s;
}

ShiftSpec ShiftSpec::operator+(const ShiftSpec& o) const {
    ShiftSpec s;
    s.offset_ = checked_add(offset_, o.offset_);
    s.symbols_ = symbols_;
    s.symbols_.insert(s.symbols_.end(), o.symbols_.begin(), o.symbols_.end());
    std::sort(s.symbols_.begin(), s.symbols_.end());
    return s;
}

ShiftSpec ShiftSpec::with_override(int i, int k, Int value) const {
    ShiftSpec s;
    s.offset_ = offset_;
    for (auto& sym : symbols_) {
        if (sym.i == i && sym.k == k)
            s.offset_ = checked_add(s.offset_, value);
        else
            s.symbols_.push_back(sym);
    }
    return s;
}

ShiftSpec ShiftSpec::with_override_all(Int value) const {
    ShiftSpec s;
    s.offset_ = offset_;
    for (size_t n = 0; n < symbols_.size(); ++n)
        s.offset_ = checked_add(s.offset_, value);
    return s;
}

std::string ShiftSpec::to_string() const {
    if (symbols_.empty()) return std::to_string(offset_);
    std::ostringstream os;
    for (size_t n = 0; n < symbols_.size(); ++n) {
        if (n) os << "+";
        os << "h(" << symbols_[n].i << "," << symbols_[n].k << ")";
    }
    if (offset_ != 0) os << (offset_ > 0 ? "+" : "") << offset_;
    return os.str();
}

namespace {

void check_prime_and_twist(int p, int i) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (i < 0) throw std::invalid_argument("twist level i must be >= 0");
}

}  // namespace

GradedSpace a_space(int p, int i) {
    check_prime_and_twist(p, i);
    Poly poly;
    Int dim = ipow(p, i);
    for (Int e = 0; e < dim; ++e)
        poly += Poly::monomial(static_cast<int>(2 * e), 1);
    std::ostringstream label;
    label << "A_i(p=" << p << ",i=" << i << ")";
    return GradedSpace{PoincarePoly(poly), label.str()};
}

GradedSpace s_space(int p, int i) {
    check_prime_and_twist(p, i);
    Poly poly;
    Int dim = ipow(p, i);
    for (Int e = 0; e < dim; ++e)
        poly += Poly::monomial(static_cast<int>(e), 1);
    std::ostringstream label;
    label << "S_i(p=" << p << ",i=" << i << ")";
    return GradedSpace{PoincarePoly(poly), label.str()};
}

GradedSpace twist_grading(const GradedSpace& u, int p, int i) {
    check_prime_and_twist(p, i);
    if (i == 0) return u;
    Int scale = ipow(p, i);
    if (scale > 1 << 20) throw std::invalid_argument("twist too large");
    Poly poly = u.poincare.poly().substitute_power(static_cast<int>(scale));
    std::ostringstream label;
    label << u.label << "^(" << i << ")";
    return GradedSpace{PoincarePoly(poly), label.str()};
}

GradedSpace dual_space(const GradedSpace& u) {
    std::string label = u.label;
    if (!label.empty() && label.back() == '*')
        label.pop_back();
    else
        label += '*';
    return GradedSpace{u.poincare, label};
}

ClassFunction tensor_power_character(const GradedSpace& u, int d) {
    if (d < 1) throw std::invalid_argument("tensor power d must be >= 1");
    const Poly& pu = u.poincare.poly();
    std::map<Partition, Poly> values;
    for (auto& rho : partitions_of(d)) {
        Poly v = Poly::constant(1);
        for (int cycle : rho.parts()) v *= pu.substitute_power(cycle);
        values[rho] = std::move(v);
    }
    return ClassFunction(d, std::move(values));
}

ClassFunction free_module_character(const GradedSpace& u, int d) {
    if (d < 1) throw std::invalid_argument("tensor power d must be >= 1");
    const Poly& pu = u.poincare.poly();
    std::map<Partition, Poly> values;
    for (auto& rho : partitions_of(d)) values[rho] = Poly();
    Poly identity_value = Poly::constant(factorial(d));
    for (int j = 0; j < d; ++j) identity_value *= pu;
    std::vector<int> ones(d, 1);
    values[Partition(ones)] = std::move(identity_value);
    return ClassFunction(d, std::move(values));
}

}  // namespace frobext
