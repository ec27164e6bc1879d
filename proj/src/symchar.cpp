#include "frobext/symchar.hpp"

#include <algorithm>
#include <stdexcept>

namespace frobext {

Int CycleType::centralizer_order() const {
    std::map<int, int> mult;
    for (int j : cycles_.parts()) ++mult[j];
    Int z = 1;
    for (auto& [len, m] : mult)
        z = checked_mul(z, checked_mul(factorial(m), ipow(len, m)));
    return z;
}

std::vector<CycleType> cycle_types_of(int d) {
    std::vector<CycleType> out;
    for (auto& p : partitions_of(d)) out.emplace_back(p);
    return out;
}

namespace {

std::vector<int> beta_set(const Partition& lambda) {
    int m = lambda.length();
    std::vector<int> beta(m);
    for (int j = 0; j < m; ++j) beta[j] = lambda.parts()[j] + (m - 1 - j);
    return beta;
}

Partition partition_from_beta_sorted(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int m = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int j = 0; j < m; ++j) {
        int part = beta[j] - (m - 1 - j);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

// chi_lambda(rho) by removing rim hooks of length rho[idx].
Int mn_recursive(const Partition& lambda, const std::vector<int>& rho, size_t idx,
                 std::map<std::pair<Partition, size_t>, Int>& memo) {
    if (idx == rho.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = rho[idx];
    std::vector<int> beta = beta_set(lambda);
    Int total = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
        int b = beta[j];
        if (b < r) continue;
        int target = b - r;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int x : beta)
            if (x > target && x < b) ++height;
        std::vector<int> next = beta;
        next[j] = target;
        Partition stripped = partition_from_beta_sorted(std::move(next));
        Int sub = mn_recursive(stripped, rho, idx + 1, memo);
        total = checked_add(total, (height % 2 == 0) ? sub : -sub);
    }
    memo[key] = total;
    return total;
}

}  // namespace

Int character(const Partition& lambda, const CycleType& rho) {
    if (lambda.weight() != rho.d())
        throw std::invalid_argument("character: |lambda| != |rho|");
    static thread_local std::map<std::pair<Partition, Partition>, Int> cache;
    auto key = std::make_pair(lambda, rho.cycles());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::map<std::pair<Partition, size_t>, Int> memo;
    Int v = mn_recursive(lambda, rho.cycles().parts(), 0, memo);
    cache[key] = v;
    return v;
}

Int CharacterTable::value(const Partition& lambda, const CycleType& rho) const {
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] == lambda) {
            for (size_t c = 0; c < classes.size(); ++c)
                if (classes[c] == rho) return values[r][c];
        }
    }
    throw std::invalid_argument("not in table");
}

CharacterTable character_table(int d) {
    if (d < 1) throw std::invalid_argument("character_table: d must be >= 1");
    CharacterTable t;
    t.d = d;
    t.rows = partitions_of(d);
    t.classes = cycle_types_of(d);
    for (auto& lambda : t.rows) {
        std::vector<Int> row;
        row.reserve(t.classes.size());
        for (auto& rho : t.classes) row.push_back(character(lambda, rho));
        t.values.push_back(std::move(row));
    }
    return t;
}

ClassFunction::ClassFunction(int d, std::map<Partition, Poly> values)
    : d_(d), values_(std::move(values)) {
    for (auto& rho : partitions_of(d))
        if (!values_.count(rho))
            throw std::invalid_argument(
                "class function undefined at cycle type " + rho.to_string());
}

const Poly& ClassFunction::at(const CycleType& rho) const {
    auto it = values_.find(rho.cycles());
    if (it == values_.end())
        throw std::invalid_argument("class function undefined at cycle type " +
                                    rho.cycles().to_string());
    return it->second;
}

ClassFunction ClassFunction::pointwise_product(const ClassFunction& o) const {
    if (d_ != o.d_) throw std::invalid_argument("class function degree mismatch");
    std::map<Partition, Poly> vals;
    for (auto& [rho, p] : values_) vals[rho] = p * o.values_.at(rho);
    return ClassFunction(d_, std::move(vals));
}

ClassFunction ClassFunction::twisted_by_character(const Partition& lambda) const {
    if (lambda.weight() != d_)
        throw std::invalid_argument("character weight mismatch");
    std::map<Partition, Poly> vals;
    for (auto& [rho, p] : values_)
        vals[rho] = p.scaled(character(lambda, CycleType(rho)));
    return ClassFunction(d_, std::move(vals));
}

Poly graded_multiplicity_raw_sum(const Partition& mu, const ClassFunction& chi) {
    if (mu.weight() != chi.d())
        throw std::invalid_argument("graded_multiplicity: |mu| != d");
    Poly sum;
    for (auto& rho : cycle_types_of(chi.d())) {
        Int weight = checked_mul(rho.class_size(), character(mu, rho));
        sum += chi.at(rho).scaled(weight);
    }
    return sum;
}

PoincarePoly graded_multiplicity(const Partition& mu, const ClassFunction& chi) {
    Poly sum = graded_multiplicity_raw_sum(mu, chi);
    Poly divided = sum.divided_exact(factorial(chi.d()));
    return PoincarePoly(divided);  // also rejects negative coefficients
}

}  // namespace frobext
