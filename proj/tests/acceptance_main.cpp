// Acceptance suite: one pass/fail line per criterion, all comparisons exact.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frobext/extcalc.hpp"
#include "frobext/kan.hpp"
#include "frobext/oracle.hpp"
#include "frobext/partition.hpp"
#include "frobext/symchar.hpp"
#include "route_corpus.hpp"

#ifndef FROBEXT_CLI_PATH
#error "FROBEXT_CLI_PATH must point at the built CLI binary"
#endif

using namespace frobext;

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& arguments) {
    std::string command =
        std::string(FROBEXT_CLI_PATH) + " " + arguments + " 2>&1";
    std::array<char, 4096> buffer;
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr)
        output += buffer.data();
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string first_line_value(const std::string& output, const std::string& key) {
    std::istringstream is(output);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind(key, 0) == 0) return line.substr(key.size());
    return "";
}

// 1. Twisted-identity Ext series through the CLI surface.
bool criterion_twisted_identity(std::string& detail) {
    const std::vector<std::pair<int, int>> cases = {{2, 1}, {2, 2}, {3, 1}, {5, 1}};
    for (auto& [p, i] : cases) {
        std::ostringstream args;
        args << "ext-divided --lambda 1 --functor I --p " << p << " --i " << i;
        CliResult r = run_cli(args.str());
        if (r.exit_code != 0) {
            detail = "CLI exited " + std::to_string(r.exit_code);
            return false;
        }
        Int dim = ipow(p, i);
        std::ostringstream expected;
        expected << "1";
        for (Int e = 1; e < dim; ++e) expected << " + t^" << 2 * e;
        std::string got = first_line_value(r.output, "Ext = ");
        if (got != expected.str()) {
            detail = "p=" + std::to_string(p) + " i=" + std::to_string(i) +
                     ": got '" + got + "', want '" + expected.str() + "'";
            return false;
        }
    }
    return true;
}

// 2. Symmetry of the twisted Weyl/Schur series in its two diagrams.
bool criterion_symmetry(std::string& detail) {
    for (int p : {2, 3}) {
        for (int i = 0; i <= 2; ++i) {
            for (int d = 1; d <= 5; ++d) {
                for (auto& mu : partitions_of(d)) {
                    for (auto& lambda : partitions_of(d)) {
                        PoincarePoly a = ext_weyl_schur_twisted(mu, lambda, p, i).poincare;
                        PoincarePoly b = ext_weyl_schur_twisted(lambda, mu, p, i).poincare;
                        if (!(a == b)) {
                            detail = "mu=" + mu.to_string() + " lambda=" +
                                     lambda.to_string() + " p=" + std::to_string(p) +
                                     " i=" + std::to_string(i);
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

// 3. Character sums equal explicit two-sided projector traces.
bool criterion_oracle_equivalence(std::string& detail) {
    GradedSpace a1_p2 = a_space(2, 1);
    for (int d = 1; d <= 3; ++d)
        for (auto& mu : partitions_of(d))
            for (auto& lambda : partitions_of(d)) {
                PoincarePoly direct = ext_weyl_schur_twisted(mu, lambda, 2, 1).poincare;
                PoincarePoly traced = oracle::graded_isotypic_trace(mu, lambda, a1_p2, d);
                if (!(direct == traced)) {
                    detail = "p=2 d=" + std::to_string(d) + " mu=" + mu.to_string() +
                             " lambda=" + lambda.to_string();
                    return false;
                }
            }
    GradedSpace a1_p3 = a_space(3, 1);
    for (int d = 1; d <= 2; ++d)
        for (auto& mu : partitions_of(d))
            for (auto& lambda : partitions_of(d)) {
                PoincarePoly direct = ext_weyl_schur_twisted(mu, lambda, 3, 1).poincare;
                PoincarePoly traced = oracle::graded_isotypic_trace(mu, lambda, a1_p3, d);
                if (!(direct == traced)) {
                    detail = "p=3 d=" + std::to_string(d) + " mu=" + mu.to_string() +
                             " lambda=" + lambda.to_string();
                    return false;
                }
            }
    return true;
}

// 4. i = 0 degenerates to the Kronecker delta.
bool criterion_degeneration(std::string& detail) {
    for (int p : {2, 3, 5}) {
        for (int d = 1; d <= 5; ++d) {
            for (auto& mu : partitions_of(d)) {
                for (auto& lambda : partitions_of(d)) {
                    PoincarePoly got = ext_weyl_schur_twisted(mu, lambda, p, 0).poincare;
                    PoincarePoly expected =
                        mu == lambda ? PoincarePoly::one() : PoincarePoly();
                    if (!(got == expected)) {
                        detail = "mu=" + mu.to_string() + " lambda=" + lambda.to_string() +
                                 " p=" + std::to_string(p);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// 5. Character engine against the polytabloid oracle plus orthogonality.
bool criterion_characters(std::string& detail) {
    for (int d = 1; d <= 5; ++d) {
        for (auto& lambda : partitions_of(d)) {
            oracle::ExplicitModule m = oracle::specht_module(lambda);
            for (auto& rho : cycle_types_of(d)) {
                Int recursive = character(lambda, rho);
                Int traced = oracle::character_from_module(m, rho).coefficient(0);
                if (recursive != traced) {
                    detail = "lambda=" + lambda.to_string() + " rho=" +
                             rho.cycles().to_string() + ": " +
                             std::to_string(recursive) + " vs " + std::to_string(traced);
                    return false;
                }
            }
        }
    }
    for (int d = 1; d <= 8; ++d) {
        CharacterTable t = character_table(d);
        size_t n = t.rows.size();
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                Int sum = 0;
                for (size_t c = 0; c < n; ++c)
                    sum += t.classes[c].class_size() * t.values[a][c] * t.values[b][c];
                if (sum != (a == b ? factorial(d) : 0)) {
                    detail = "row orthogonality fails at d=" + std::to_string(d);
                    return false;
                }
            }
        for (size_t c1 = 0; c1 < n; ++c1)
            for (size_t c2 = 0; c2 < n; ++c2) {
                Int sum = 0;
                for (size_t a = 0; a < n; ++a)
                    sum += t.values[a][c1] * t.values[a][c2];
                Int expected = c1 == c2 ? t.classes[c1].centralizer_order() : 0;
                if (sum != expected) {
                    detail = "column orthogonality fails at d=" + std::to_string(d);
                    return false;
                }
            }
    }
    return true;
}

// 6. Integrality certificates across the full symmetry sweep.
bool criterion_integrality(std::string& detail) {
    for (int p : {2, 3}) {
        for (int i = 0; i <= 2; ++i) {
            GradedSpace u = a_space(p, i);
            for (int d = 1; d <= 5; ++d) {
                Int dfact = factorial(d);
                for (auto& lambda : partitions_of(d)) {
                    ClassFunction chi =
                        tensor_power_character(u, d).twisted_by_character(lambda);
                    for (auto& mu : partitions_of(d)) {
                        Poly raw = graded_multiplicity_raw_sum(mu, chi);
                        for (auto& [deg, coeff] : raw.coefficients()) {
                            if (coeff % dfact != 0) {
                                detail = "coefficient " + std::to_string(coeff) +
                                         " at degree " + std::to_string(deg) +
                                         " not divisible by " + std::to_string(dfact);
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    return true;
}

// 7. Abacus roundtrip and the F_k weight/core identities.
bool criterion_abacus(std::string& detail) {
    for (int p : {2, 3, 5}) {
        for (int d = 0; d <= 12; ++d) {
            for (auto& lambda : partitions_of(d)) {
                PQuotientData q = p_core_quotient(lambda, p);
                if (q.total_weight() != d || from_core_quotient(q) != lambda) {
                    detail = "roundtrip fails for " + lambda.to_string() +
                             " at p=" + std::to_string(p);
                    return false;
                }
            }
        }
    }
    for (int p : {2, 3, 5}) {
        for (int d = 0; d <= 6; ++d) {
            for (auto& lambda : partitions_of(d)) {
                for (int k = 0; k < p; ++k) {
                    Partition image = f_k(lambda, p, k);
                    if (image.weight() != p * d) {
                        detail = "weight identity fails for " + lambda.to_string();
                        return false;
                    }
                    PQuotientData q = p_core_quotient(image, p);
                    if (!q.core.empty() || q.quotient[k] != lambda) {
                        detail = "core/concentration fails for " + lambda.to_string();
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// 8. Kan-route evaluation equals the direct closed forms, with confluent
// normal forms across position strategies.
bool criterion_routes(std::string& detail) {
    std::vector<frobext_tests::RouteCase> corpus = frobext_tests::route_corpus();
    if (corpus.size() < 50) {
        detail = "corpus too small: " + std::to_string(corpus.size());
        return false;
    }
    for (auto& route : corpus) {
        ExtAnswer via_kan = evaluate_ext_query(route.query, route.p);
        if (!via_kan.same_value(route.direct)) {
            detail = "route mismatch on " + route.query.to_string();
            return false;
        }
        NormalizeResult a = normalize(route.query, route.p,
                                      RewriteStrategy::InnermostLeftmost);
        NormalizeResult b = normalize(route.query, route.p,
                                      RewriteStrategy::InnermostRightmost);
        NormalizeResult c = normalize(route.query, route.p,
                                      RewriteStrategy::OutermostLeftmost);
        if (!(a.expr == b.expr) || !(a.expr == c.expr)) {
            detail = "non-confluent normal forms on " + route.query.to_string();
            return false;
        }
    }
    for (auto& [expr, p] : frobext_tests::normalization_corpus()) {
        NormalizeResult a = normalize(expr, p, RewriteStrategy::InnermostLeftmost);
        NormalizeResult b = normalize(expr, p, RewriteStrategy::InnermostRightmost);
        NormalizeResult c = normalize(expr, p, RewriteStrategy::OutermostLeftmost);
        if (!(a.expr == b.expr) || !(a.expr == c.expr)) {
            detail = "non-confluent normal forms on " + expr.to_string();
            return false;
        }
    }
    return true;
}

// 9. The two corollary pipelines agree wherever both apply.
bool criterion_cross_corollary(std::string& detail) {
    for (int p : {2, 3}) {
        for (int i = 0; i <= 2; ++i) {
            for (int d = 0; d <= 5; ++d) {
                for (auto& nu : partitions_of(d)) {
                    if (!consistency_cor34_vs_cor35(nu, p, i)) {
                        detail = "nu=" + nu.to_string() + " p=" + std::to_string(p) +
                                 " i=" + std::to_string(i);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {"1. twisted-identity Ext series via the CLI", criterion_twisted_identity},
        {"2. Weyl/Schur series symmetric in both diagrams (d <= 5)", criterion_symmetry},
        {"3. character sums equal projector-trace oracle", criterion_oracle_equivalence},
        {"4. i = 0 degenerates to the Kronecker delta (d <= 5)", criterion_degeneration},
        {"5. character engine: oracle match (d <= 5) and orthogonality (d <= 8)",
         criterion_characters},
        {"6. character sums divisible by d! across the sweep", criterion_integrality},
        {"7. abacus roundtrip (w <= 12) and F_k identities (w <= 6)", criterion_abacus},
        {"8. rewrite-route equivalence and confluence on the corpus", criterion_routes},
        {"9. multidegree and character pipelines agree (|nu| <= 5)",
         criterion_cross_corollary},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (ok) {
            std::cout << "[PASS] " << criterion.name << " (" << elapsed << " ms)\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << criterion.name << " (" << elapsed << " ms)";
            if (!detail.empty()) std::cout << " -- " << detail;
            std::cout << "\n";
        }
    }
    if (failures != 0)
        std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
