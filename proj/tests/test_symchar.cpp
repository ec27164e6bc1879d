#include "doctest.h"

#include <map>

#include "frobext/graded.hpp"
#include "frobext/oracle.hpp"
#include "frobext/partition.hpp"
#include "frobext/symchar.hpp"

using namespace frobext;

TEST_CASE("centralizer order and class size") {
    CycleType rho{Partition{2, 1, 1}};
    CHECK(rho.centralizer_order() == 4);  // 2^1 1! * 1^2 2!
    CHECK(rho.class_size() == 6);
    CycleType identity{Partition{1, 1, 1}};
    CHECK(identity.centralizer_order() == 6);
    CHECK(identity.class_size() == 1);
}

TEST_CASE("trivial and sign characters") {
    for (int d = 1; d <= 6; ++d) {
        Partition trivial{d};
        Partition sign(std::vector<int>(d, 1));
        for (auto& rho : cycle_types_of(d)) {
            CHECK(character(trivial, rho) == 1);
            CHECK(character(sign, rho) == rho.sign());
        }
    }
}

TEST_CASE("chi_{(2,1)} at the 3-cycle") {
    CHECK(character(Partition{2, 1}, CycleType{Partition{3}}) == -1);
}

TEST_CASE("character weight mismatch throws") {
    CHECK_THROWS_AS(character(Partition{2}, CycleType{Partition{3}}),
                    std::invalid_argument);
}

TEST_CASE("small character tables") {
    CharacterTable t1 = character_table(1);
    REQUIRE(t1.rows.size() == 1);
    CHECK(t1.values[0][0] == 1);

    CharacterTable t2 = character_table(2);
    REQUIRE(t2.rows.size() == 2);
    // rows and classes in reverse lexicographic order: (2), (1,1)
    CHECK(t2.rows[0] == Partition{2});
    CHECK(t2.values[0] == std::vector<Int>{1, 1});
    CHECK(t2.values[1] == std::vector<Int>{-1, 1});
}

TEST_CASE("row and column orthogonality up to d = 8") {
    for (int d = 1; d <= 8; ++d) {
        CharacterTable t = character_table(d);
        size_t n = t.rows.size();
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = a; b < n; ++b) {
                Int sum = 0;
                for (size_t c = 0; c < n; ++c)
                    sum += t.classes[c].class_size() * t.values[a][c] * t.values[b][c];
                CHECK(sum == (a == b ? factorial(d) : 0));
            }
        }
        for (size_t c1 = 0; c1 < n; ++c1) {
            for (size_t c2 = c1; c2 < n; ++c2) {
                Int sum = 0;
                for (size_t a = 0; a < n; ++a)
                    sum += t.values[a][c1] * t.values[a][c2];
                if (c1 == c2)
                    CHECK(sum == t.classes[c1].centralizer_order());
                else
                    CHECK(sum == 0);
            }
        }
    }
}

TEST_CASE("character at the identity is the Specht dimension") {
    for (int d = 1; d <= 8; ++d) {
        CycleType identity{Partition(std::vector<int>(d, 1))};
        for (auto& lambda : partitions_of(d))
            CHECK(character(lambda, identity) == specht_dim(lambda));
    }
}

TEST_CASE("characters agree with polytabloid traces up to d = 5") {
    for (int d = 1; d <= 5; ++d) {
        for (auto& lambda : partitions_of(d)) {
            oracle::ExplicitModule m = oracle::specht_module(lambda);
            for (auto& rho : cycle_types_of(d)) {
                Int via_matrices = oracle::character_from_module(m, rho).coefficient(0);
                CHECK(character(lambda, rho) == via_matrices);
            }
        }
    }
}

TEST_CASE("class functions validate their support") {
    std::map<Partition, Poly> values;
    values[Partition{2}] = Poly::constant(1);
    CHECK_THROWS_AS(ClassFunction(2, values), std::invalid_argument);
    values[Partition{1, 1}] = Poly::constant(1);
    CHECK_NOTHROW(ClassFunction(2, values));
}

TEST_CASE("graded_multiplicity of the regular representation") {
    for (int d = 1; d <= 5; ++d) {
        std::map<Partition, Poly> values;
        for (auto& rho : partitions_of(d)) values[rho] = Poly();
        values[Partition(std::vector<int>(d, 1))] = Poly::constant(factorial(d));
        ClassFunction regular(d, values);
        for (auto& mu : partitions_of(d)) {
            PoincarePoly m = graded_multiplicity(mu, regular);
            CHECK(m == PoincarePoly(Poly::constant(specht_dim(mu))));
        }
    }
}

TEST_CASE("graded_multiplicity picks out orthogonality") {
    for (int d = 1; d <= 5; ++d) {
        Partition top{d};
        for (auto& lambda : partitions_of(d)) {
            std::map<Partition, Poly> values;
            for (auto& rho : partitions_of(d))
                values[rho] = Poly::constant(character(lambda, CycleType{rho}));
            ClassFunction chi(d, values);
            PoincarePoly m = graded_multiplicity(top, chi);
            PoincarePoly expected =
                lambda == top ? PoincarePoly::one() : PoincarePoly();
            CHECK(m == expected);
        }
    }
}

TEST_CASE("graded_multiplicity example against the projector oracle") {
    GradedSpace u = a_space(2, 1);
    ClassFunction chi =
        tensor_power_character(u, 2).twisted_by_character(Partition{2});
    PoincarePoly m = graded_multiplicity(Partition{2}, chi);
    Poly expected = Poly::constant(1) + Poly::monomial(2, 1) + Poly::monomial(4, 1);
    CHECK(m == PoincarePoly(expected));
    CHECK(m == oracle::graded_isotypic_trace(Partition{2}, Partition{2}, u, 2));
}

TEST_CASE("graded_multiplicity rejects non-integral inputs") {
    std::map<Partition, Poly> values;
    values[Partition{2}] = Poly::constant(1);
    values[Partition{1, 1}] = Poly::constant(2);
    ClassFunction bad(2, values);
    CHECK_THROWS_AS(graded_multiplicity(Partition{2}, bad), std::domain_error);
}

TEST_CASE("graded constructions stay nonnegative and integral") {
    for (int p : {2, 3}) {
        for (int i = 0; i <= 2; ++i) {
            GradedSpace u = a_space(p, i);
            for (int d = 1; d <= 4; ++d) {
                for (auto& lambda : partitions_of(d)) {
                    ClassFunction chi =
                        tensor_power_character(u, d).twisted_by_character(lambda);
                    for (auto& mu : partitions_of(d))
                        CHECK_NOTHROW(graded_multiplicity(mu, chi));
                }
            }
        }
    }
    // the d = 5, 6 slices at (p, i) = (2, 1) and (3, 1)
    for (int p : {2, 3}) {
        GradedSpace u = a_space(p, 1);
        for (int d = 5; d <= 6; ++d) {
            for (auto& lambda : partitions_of(d)) {
                ClassFunction chi =
                    tensor_power_character(u, d).twisted_by_character(lambda);
                for (auto& mu : partitions_of(d))
                    CHECK_NOTHROW(graded_multiplicity(mu, chi));
            }
        }
    }
}
