#include "frobext/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace frobext {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (j > 0 && parts_[j] > parts_[j - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "[]";
    std::ostringstream os;
    for (size_t j = 0; j < parts_.size(); ++j) {
        if (j) os << ",";
        os << parts_[j];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](char c) { return c == ' ' || c == '\t'; }),
            s.end());
    if (s.empty() || s == "[]" || s == "()") return Partition();
    std::vector<int> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty())
            throw std::invalid_argument("invalid partition syntax: '" + text + "'");
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid partition syntax: '" + text + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("invalid partition syntax: '" + text + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> cols(lambda.parts()[0], 0);
    for (int row : lambda.parts())
        for (int c = 0; c < row; ++c) ++cols[c];
    return Partition(std::move(cols));
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    std::vector<std::vector<int>> hooks;
    for (int r = 0; r < lambda.length(); ++r) {
        std::vector<int> row;
        for (int c = 0; c < lambda.parts()[r]; ++c)
            row.push_back(lambda.parts()[r] - c + conj.parts()[c] - r - 1);
        hooks.push_back(std::move(row));
    }
    return hooks;
}

Int specht_dim(const Partition& lambda) {
    Int product = 1;
    for (auto& row : hook_lengths(lambda))
        for (int h : row) product = checked_mul(product, h);
    Int fact = factorial(lambda.weight());
    if (fact % product != 0)
        throw std::logic_error("hook product does not divide d!");
    return fact / product;
}

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    // reverse lexicographic: largest first part first
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, d, d == 0 ? 1 : d);
    return out;
}

namespace {

// Beta-numbers with exactly m beads; m >= length(lambda).
std::vector<int> beta_numbers(const Partition& lambda, int m) {
    std::vector<int> beta(m);
    for (int j = 0; j < m; ++j) beta[j] = lambda.part(j) + (m - 1 - j);
    return beta;
}

// Partition from a descending set of distinct nonnegative integers.
Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int m = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int j = 0; j < m; ++j) {
        int part = beta[j] - (m - 1 - j);
        if (part < 0) throw std::logic_error("invalid beta set");
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

int bead_count(const Partition& lambda, int p) {
    int need = std::max(lambda.length(), 1);
    return ((need + p - 1) / p) * p;
}

void check_p(int p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
}

void check_runner(int k, int p) {
    if (k < 0 || k >= p)
        throw std::out_of_range("runner index k must satisfy 0 <= k <= p-1");
}

int mod_p(int v, int p) { return ((v % p) + p) % p; }

}  // namespace

int PQuotientData::total_weight() const {
    int w = core.weight();
    for (const auto& q : quotient) w += p * q.weight();
    return w;
}

PQuotientData p_core_quotient(const Partition& lambda, int p, int runner_offset) {
    check_p(p);
    int m = bead_count(lambda, p);
    std::vector<int> beta = beta_numbers(lambda, m);

    std::vector<std::vector<int>> runner_positions(p);
    for (int b : beta) runner_positions[b % p].push_back((b - b % p) / p);
    for (auto& pos : runner_positions)
        std::sort(pos.begin(), pos.end(), std::greater<int>());

    PQuotientData out;
    out.p = p;
    out.quotient.resize(p);
    for (int k = 0; k < p; ++k)
        out.quotient[k] = partition_from_beta(runner_positions[mod_p(k + runner_offset, p)]);

    std::vector<int> core_beta;
    for (int r = 0; r < p; ++r)
        for (int l = 0; l < static_cast<int>(runner_positions[r].size()); ++l)
            core_beta.push_back(p * l + r);
    out.core = partition_from_beta(std::move(core_beta));
    return out;
}

Partition from_core_quotient(const PQuotientData& q, int runner_offset) {
    check_p(q.p);
    int p = q.p;
    if (static_cast<int>(q.quotient.size()) != p)
        throw std::invalid_argument("quotient must have exactly p components");
    {
        PQuotientData core_check = p_core_quotient(q.core, p);
        if (core_check.core != q.core)
            throw std::invalid_argument("core component is not a p-core");
    }

    int max_quotient_len = 0;
    for (const auto& part : q.quotient)
        max_quotient_len = std::max(max_quotient_len, part.length());
    // Enough rows that every runner keeps >= max_quotient_len beads.
    int rows = bead_count(q.core, p) / p + max_quotient_len + 1;
    int m = p * rows;

    // Bead counts per runner of the core, with m beads total.
    std::vector<int> core_beta = beta_numbers(q.core, m);
    std::vector<int> runner_beads(p, 0);
    for (int b : core_beta) ++runner_beads[b % p];

    std::vector<int> beta;
    for (int k = 0; k < p; ++k) {
        int r = mod_p(k + runner_offset, p);
        int c = runner_beads[r];
        const Partition& mu = q.quotient[k];
        if (mu.length() > c)
            throw std::logic_error("bead count too small for quotient component");
        for (int j = 0; j < c; ++j) {
            int position = mu.part(j) + (c - 1 - j);
            beta.push_back(p * position + r);
        }
    }
    return partition_from_beta(std::move(beta));
}

Partition f_k(const Partition& lambda, int p, int k, int runner_offset) {
    check_p(p);
    check_runner(k, p);
    PQuotientData q;
    q.p = p;
    q.quotient.resize(p);
    q.quotient[k] = lambda;
    return from_core_quotient(q, runner_offset);
}

Partition f_k_iterated(const Partition& lambda, int p, int k, int i,
                       int runner_offset) {
    if (i < 1) throw std::invalid_argument("iteration count i must be >= 1");
    Partition r = lambda;
    for (int step = 0; step < i; ++step) r = f_k(r, p, k, runner_offset);
    return r;
}

bool try_peel_f_k(const Partition& nu, int p, int i, Partition& lambda_out,
                  int& k_out, int runner_offset) {
    check_p(p);
    if (i < 1) return false;
    Partition cur = nu;
    int k = -1;
    for (int step = 0; step < i; ++step) {
        if (cur.empty()) {
            lambda_out = Partition();
            k_out = k;
            return true;
        }
        PQuotientData q = p_core_quotient(cur, p, runner_offset);
        if (!q.core.empty()) return false;
        int nonzero = -1;
        for (int idx = 0; idx < p; ++idx) {
            if (!q.quotient[idx].empty()) {
                if (nonzero != -1) return false;
                nonzero = idx;
            }
        }
        if (nonzero == -1) return false;  // nonempty nu with all-empty quotient
        if (k != -1 && nonzero != k) return false;
        k = nonzero;
        cur = q.quotient[k];
    }
    lambda_out = cur;
    k_out = k;
    return true;
}

namespace {

// Backtracking enumeration of LR skew tableaux of shape lambda/mu with
// content nu: semistandard filling whose reverse reading word is a lattice
// word.
struct LrCounter {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> filling;
    std::vector<int> content;
    Int count = 0;

    LrCounter(const Partition& l, const Partition& m, const Partition& n)
        : lambda(l), mu(m), nu(n) {
        filling.resize(l.length());
        for (int r = 0; r < l.length(); ++r)
            filling[r].assign(l.parts()[r], 0);
        content.assign(n.length() + 1, 0);
    }

    void run() { fill_cell(0, mu.part(0)); }

    void fill_cell(int r, int c) {
        if (r == lambda.length()) {
            if (lattice_word()) ++count;
            return;
        }
        if (c >= lambda.parts()[r]) {
            int nr = r + 1;
            fill_cell(nr, nr < lambda.length() ? mu.part(nr) : 0);
            return;
        }
        for (int e = 1; e <= nu.length(); ++e) {
            if (content[e] >= nu.parts()[e - 1]) continue;
            if (c > 0 && c - 1 >= mu.part(r) && filling[r][c - 1] > e) continue;
            if (r > 0 && c < lambda.parts()[r - 1] && c >= mu.part(r - 1) &&
                filling[r - 1][c] >= e)
                continue;
            filling[r][c] = e;
            ++content[e];
            fill_cell(r, c + 1);
            --content[e];
            filling[r][c] = 0;
        }
    }

    bool lattice_word() const {
        std::vector<int> seen(nu.length() + 2, 0);
        for (int r = 0; r < lambda.length(); ++r) {
            for (int c = lambda.parts()[r] - 1; c >= mu.part(r); --c) {
                int e = filling[r][c];
                ++seen[e];
                if (e > 1 && seen[e] > seen[e - 1]) return false;
            }
        }
        return true;
    }
};

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (int r = 0; r < mu.length(); ++r)
        if (lambda.parts()[r] < mu.parts()[r]) return false;
    return true;
}

}  // namespace

std::map<Partition, Int> lr_coefficients(const Partition& mu, const Partition& nu) {
    std::map<Partition, Int> out;
    int n = mu.weight() + nu.weight();
    for (const Partition& lambda : partitions_of(n)) {
        if (!contains(lambda, mu)) continue;
        if (lambda.length() > mu.length() + nu.length()) continue;
        if (lambda.part(0) > mu.part(0) + nu.part(0)) continue;
        LrCounter counter(lambda, mu, nu);
        counter.run();
        if (counter.count > 0) out[lambda] = counter.count;
    }
    return out;
}

}  // namespace frobext
