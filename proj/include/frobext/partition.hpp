#pragma once

#include <map>
#include <string>
#include <vector>

#include "frobext/int_util.hpp"

namespace frobext {

/// Young diagram: a weakly decreasing sequence of positive row lengths.
/// The empty diagram is a first-class value of weight 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    int part(int row) const {  // 0 beyond the last row
        return row < length() ? parts_[row] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    /// "3,2,1"; the empty partition renders as "[]".
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

/// Hook lengths of every cell, row-major.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

/// Number of standard Young tableaux of shape lambda (hook length formula).
Int specht_dim(const Partition& lambda);

/// All partitions of d in reverse lexicographic order, each exactly once.
std::vector<Partition> partitions_of(int d);

// ---------------------------------------------------------------------------
// Abacus convention (fixed; documented here and nowhere else).
//
// A partition lambda is encoded by beta-numbers  beta_j = lambda_j + (m-1-j)
// for j = 0..m-1, where the bead count m is always the smallest multiple of p
// with m >= max(length(lambda), 1). Runner r of the p-abacus holds the beads
// with beta = r (mod p), at runner positions (beta - r)/p. Quotient component
// k is the partition read off runner k (positions sorted descending minus the
// staircase); the core is obtained by sliding every bead down to the bottom
// of its runner. Fixing m = 0 (mod p) pins the k-indexing of the quotient.
// A runner_offset of r relabels component k to read runner (k + r) mod p;
// both directions of the correspondence accept the same offset so they stay
// mutually inverse.
// ---------------------------------------------------------------------------

struct PQuotientData {
    Partition core;
    std::vector<Partition> quotient;  // exactly p components, index 0..p-1
    int p = 2;

    /// weight(core) + p * sum of quotient weights.
    int total_weight() const;
};

PQuotientData p_core_quotient(const Partition& lambda, int p, int runner_offset = 0);
Partition from_core_quotient(const PQuotientData& q, int runner_offset = 0);

/// Partition with empty p-core and p-quotient concentrated at index k
/// with value lambda. Weight of the result is p * weight(lambda).
Partition f_k(const Partition& lambda, int p, int k, int runner_offset = 0);

/// i-fold application of f_k; i >= 1.
Partition f_k_iterated(const Partition& lambda, int p, int k, int i,
                       int runner_offset = 0);

/// Inverse of f_k_iterated: if nu has empty p-core at every level and its
/// quotient is concentrated at one index k consistently for i peels, returns
/// the peeled partition and k. Returns false otherwise. The empty partition
/// peels to itself with k = -1 (any index fits).
bool try_peel_f_k(const Partition& nu, int p, int i, Partition& lambda_out,
                  int& k_out, int runner_offset = 0);

/// Littlewood-Richardson coefficients c^lambda_{mu,nu} for all lambda of
/// weight |mu| + |nu|, by LR tableau enumeration. Absent keys mean 0.
std::map<Partition, Int> lr_coefficients(const Partition& mu, const Partition& nu);

}  // namespace frobext
