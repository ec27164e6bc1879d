#include "doctest.h"

#include <algorithm>
#include <vector>

#include "frobext/graded.hpp"
#include "frobext/partition.hpp"

using namespace frobext;

namespace {

Poly poly_from_degrees(std::initializer_list<int> degrees) {
    Poly p;
    for (int e : degrees) p += Poly::monomial(e, 1);
    return p;
}

// Permutation character at t = 1: the number of functions {1..d} -> basis(U)
// fixed by a permutation of cycle type rho equals dim(U)^{#cycles}.
Int fixed_function_count(int dim, const CycleType& rho) {
    return ipow(dim, rho.cycle_count());
}

}  // namespace

TEST_CASE("a_space matches its definition") {
    CHECK(a_space(2, 1).poincare == PoincarePoly(poly_from_degrees({0, 2})));
    CHECK(a_space(3, 1).poincare == PoincarePoly(poly_from_degrees({0, 2, 4})));
    CHECK(a_space(2, 0).poincare == PoincarePoly::one());
    CHECK(a_space(5, 0).poincare == PoincarePoly::one());
    CHECK(a_space(2, 1).label == "A_i(p=2,i=1)");
    CHECK_THROWS_AS(a_space(4, 1), std::invalid_argument);
}

TEST_CASE("a_space dimension and top degree") {
    for (int p : {2, 3, 5}) {
        for (int i = 0; i <= 3; ++i) {
            GradedSpace u = a_space(p, i);
            CHECK(u.dimension() == ipow(p, i));
            CHECK(u.poincare.poly().degree() == 2 * (ipow(p, i) - 1));
        }
    }
}

TEST_CASE("s_space matches its definition") {
    CHECK(s_space(2, 1).poincare == PoincarePoly(poly_from_degrees({0, 1})));
    CHECK(s_space(2, 2).poincare ==
          PoincarePoly(poly_from_degrees({0, 1, 2, 3})));
    CHECK(s_space(3, 0).poincare == PoincarePoly::one());
    for (int p : {2, 3}) {
        for (int i = 0; i <= 3; ++i) {
            GradedSpace u = s_space(p, i);
            CHECK(u.dimension() == ipow(p, i));
            CHECK(u.poincare.poly().degree() == ipow(p, i) - 1);
        }
    }
}

TEST_CASE("twist_grading scales degrees") {
    GradedSpace a1 = a_space(2, 1);
    CHECK(twist_grading(a1, 2, 0) == a1);
    GradedSpace twisted = twist_grading(a1, 2, 1);
    CHECK(twisted.poincare == PoincarePoly(poly_from_degrees({0, 4})));
    for (int i = 0; i <= 3; ++i)
        CHECK(twist_grading(a_space(3, 1), 3, i).dimension() == 3);
}

TEST_CASE("dual_space keeps the Poincare polynomial and is involutive") {
    GradedSpace a1 = a_space(2, 1);
    CHECK(dual_space(a1).poincare == a1.poincare);
    CHECK(dual_space(dual_space(a1)) == a1);
    CHECK(dual_space(s_space(2, 1)).poincare ==
          PoincarePoly(poly_from_degrees({0, 1})));
}

TEST_CASE("tensor_power_character on the stated examples") {
    GradedSpace a1 = a_space(2, 1);
    ClassFunction chi = tensor_power_character(a1, 2);
    // at (1,1): (1+t^2)^2
    Poly sq = a1.poincare.poly() * a1.poincare.poly();
    CHECK(chi.at(CycleType{Partition{1, 1}}) == sq);
    // at (2): swap fixes e(x)e with doubled degree
    CHECK(chi.at(CycleType{Partition{2}}) == poly_from_degrees({0, 4}));
}

TEST_CASE("tensor_power_character at the identity is the d-th power") {
    for (int p : {2, 3}) {
        GradedSpace u = a_space(p, 1);
        for (int d = 1; d <= 4; ++d) {
            ClassFunction chi = tensor_power_character(u, d);
            Poly power = Poly::constant(1);
            for (int m = 0; m < d; ++m) power *= u.poincare.poly();
            CHECK(chi.at(CycleType{Partition(std::vector<int>(d, 1))}) == power);
        }
    }
}

TEST_CASE("one-dimensional degree-zero space has constant character") {
    GradedSpace unit{PoincarePoly::one(), "k"};
    for (int d = 1; d <= 4; ++d) {
        ClassFunction chi = tensor_power_character(unit, d);
        for (auto& rho : partitions_of(d))
            CHECK(chi.at(CycleType{rho}) == Poly::constant(1));
    }
}

TEST_CASE("tensor_power_character at t = 1 counts fixed functions") {
    for (int dim = 1; dim <= 4; ++dim) {
        Poly poly;
        for (int e = 0; e < dim; ++e) poly += Poly::monomial(e, 1);
        GradedSpace u{PoincarePoly(poly), "test"};
        for (int d = 1; d <= 4; ++d) {
            ClassFunction chi = tensor_power_character(u, d);
            for (auto& rho : cycle_types_of(d))
                CHECK(chi.at(rho).evaluate_at_one() ==
                      fixed_function_count(dim, rho));
        }
    }
}

TEST_CASE("free_module_character shapes") {
    GradedSpace a1 = a_space(2, 1);
    SUBCASE("d = 1 collapses to the space itself") {
        ClassFunction chi = free_module_character(a1, 1);
        CHECK(chi.at(CycleType{Partition{1}}) == a1.poincare.poly());
    }
    SUBCASE("trivial space gives the regular representation") {
        GradedSpace unit{PoincarePoly::one(), "k"};
        for (int d = 1; d <= 4; ++d) {
            ClassFunction chi = free_module_character(unit, d);
            CHECK(chi.at(CycleType{Partition(std::vector<int>(d, 1))}) ==
                  Poly::constant(factorial(d)));
            for (auto& rho : partitions_of(d))
                if (rho != Partition(std::vector<int>(d, 1)))
                    CHECK(chi.at(CycleType{rho}).is_zero());
        }
    }
    SUBCASE("d = 2 over A_1") {
        ClassFunction chi = free_module_character(a1, 2);
        Poly sq = a1.poincare.poly() * a1.poincare.poly();
        CHECK(chi.at(CycleType{Partition{1, 1}}) == sq.scaled(2));
        CHECK(chi.at(CycleType{Partition{2}}).is_zero());
    }
}

TEST_CASE("free module multiplicity is dim Specht times the power") {
    for (int p : {2, 3}) {
        GradedSpace u = a_space(p, 1);
        for (int d = 1; d <= 5; ++d) {
            ClassFunction chi = free_module_character(u, d);
            Poly power = Poly::constant(1);
            for (int m = 0; m < d; ++m) power *= u.poincare.poly();
            for (auto& mu : partitions_of(d)) {
                PoincarePoly got = graded_multiplicity(mu, chi);
                CHECK(got == PoincarePoly(power.scaled(specht_dim(mu))));
            }
        }
    }
}

TEST_CASE("shift specs compose additively and fold") {
    ShiftSpec h10 = ShiftSpec::symbol(1, 0);
    ShiftSpec h21 = ShiftSpec::symbol(2, 1);
    ShiftSpec sum = h10 + h21 + ShiftSpec::value(3);
    CHECK(sum.to_string() == "h(1,0)+h(2,1)+3");
    CHECK(sum.with_override(1, 0, 5).to_string() == "h(2,1)+8");
    CHECK(sum.with_override_all(2).offset() == 7);
    CHECK(ShiftSpec().is_zero());
    CHECK((h10 + h10).symbols().size() == 2);
}

TEST_CASE("poly rendering") {
    Poly p = Poly::constant(1) + Poly::monomial(2, 1) + Poly::monomial(4, 2);
    CHECK(p.to_string() == "1 + t^2 + 2 t^4");
    CHECK(p.to_latex() == "1 + t^{2} + 2 t^{4}");
    CHECK(Poly().to_string() == "0");
    Poly q = Poly::monomial(1, 1) - Poly::constant(2);
    CHECK(q.to_string() == "-2 + t");
    CHECK(PoincarePoly(p).pairs() ==
          std::vector<std::pair<int, Int>>{{0, 1}, {2, 1}, {4, 2}});
    CHECK_THROWS_AS((void)PoincarePoly{q}, std::domain_error);
}

TEST_CASE("poly substitution and exact division") {
    Poly p = Poly::constant(1) + Poly::monomial(2, 1);
    CHECK(p.substitute_power(3) == Poly::constant(1) + Poly::monomial(6, 1));
    CHECK(p.scaled(6).divided_exact(3) == p.scaled(2));
    CHECK_THROWS_AS(p.divided_exact(2), std::domain_error);
    CHECK(p.shifted(2) == Poly::monomial(2, 1) + Poly::monomial(4, 1));
}
