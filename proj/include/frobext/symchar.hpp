#pragma once

#include <map>
#include <vector>

#include "frobext/partition.hpp"
#include "frobext/poly.hpp"

namespace frobext {

/// Conjugacy class of Sigma_d, named by its cycle lengths.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}

    const Partition& cycles() const { return cycles_; }
    int d() const { return cycles_.weight(); }
    int cycle_count() const { return cycles_.length(); }
    int sign() const { return (d() - cycle_count()) % 2 == 0 ? 1 : -1; }

    /// Centralizer order z = prod_j m_j! j^{m_j}.
    Int centralizer_order() const;
    Int class_size() const { return factorial(d()) / centralizer_order(); }

    bool operator==(const CycleType& o) const { return cycles_ == o.cycles_; }
    bool operator<(const CycleType& o) const { return cycles_ < o.cycles_; }

private:
    Partition cycles_;
};

std::vector<CycleType> cycle_types_of(int d);

/// Irreducible character chi_lambda at cycle type rho, by the
/// Murnaghan-Nakayama recursion over beta-sets. Requires |lambda| = |rho|.
Int character(const Partition& lambda, const CycleType& rho);

struct CharacterTable {
    int d = 0;
    std::vector<Partition> rows;      // partitions of d, reverse lex
    std::vector<CycleType> classes;   // same order, as cycle types
    std::vector<std::vector<Int>> values;  // values[row][class]

    Int value(const Partition& lambda, const CycleType& rho) const;
};

CharacterTable character_table(int d);

/// Graded class function on Sigma_d: one integer polynomial per cycle type.
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(int d, std::map<Partition, Poly> values);

    int d() const { return d_; }
    const Poly& at(const CycleType& rho) const;
    const std::map<Partition, Poly>& values() const { return values_; }

    ClassFunction pointwise_product(const ClassFunction& o) const;
    /// Multiply every value by the ordinary character chi_lambda.
    ClassFunction twisted_by_character(const Partition& lambda) const;

private:
    int d_ = 0;
    std::map<Partition, Poly> values_;  // keyed by cycle type partition
};

/// Graded multiplicity of Sp_mu in a graded character:
/// (1/d!) sum_rho |class(rho)| chi_mu(rho) chi(rho), computed exactly.
/// Throws if the result has a non-integral or negative coefficient.
PoincarePoly graded_multiplicity(const Partition& mu, const ClassFunction& chi);

/// The summed polynomial before division by d!; exposed so integrality can
/// be certified independently of graded_multiplicity's own check.
Poly graded_multiplicity_raw_sum(const Partition& mu, const ClassFunction& chi);

}  // namespace frobext
