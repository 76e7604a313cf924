#include <doctest.h>

#include "wtrunc/characters.hpp"

using namespace wtrunc::chars;

TEST_CASE("free_character: single weight-2 generator counts partitions into parts >= 2") {
    QSeries s = free_character(GeneratorProfile::explicit_weights({2}), 6);
    CHECK(s.coeffs() == std::vector<std::int64_t>{1, 0, 1, 1, 2, 2, 4});
}

TEST_CASE("free_character: all even weights, coefficient 7 at weight 6") {
    QSeries s = free_character(GeneratorProfile::all_even_from_2(), 6);
    CHECK(s[0] == 1);
    CHECK(s[6] == 7);  // L d^4L, L d^2L, (dL)^2, L^3, d^2W4, L W4, W6
}

TEST_CASE("free_character: empty profile is the vacuum line") {
    QSeries s = free_character(GeneratorProfile::explicit_weights({}), 5);
    CHECK(s.coeffs() == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("orbifold_character: rank-2 case, hand-checked prefix") {
    QSeries s = orbifold_character(1, 4);
    CHECK(s.coeffs() == std::vector<std::int64_t>{1, 0, 1, 1, 3});
    CHECK(s[1] == 0);  // the standard representation has no invariant vector
}

TEST_CASE("brute_force_dim: trivial and hand-enumerated values") {
    CHECK(brute_force_dim(1, 0) == 1);
    CHECK(brute_force_dim(1, 1) == 0);
    CHECK(brute_force_dim(1, 4) == 3);
    CHECK(brute_force_dim(2, 2) == 1);  // the quadratic Casimir monomial
}

TEST_CASE("oracle equivalence: orbifold_character vs brute force, n <= 2, d <= 8") {
    for (int n = 1; n <= 2; ++n) {
        QSeries s = orbifold_character(n, 8);
        for (int d = 0; d <= 8; ++d) {
            INFO("n=" << n << " d=" << d);
            CHECK(s[d] == brute_force_dim(n, d));
        }
    }
}

TEST_CASE("first_discrepancy basics") {
    QSeries a = free_character(GeneratorProfile::explicit_weights({2}), 6);
    CHECK(!first_discrepancy(a, a).has_value());
    QSeries b = free_character(GeneratorProfile::explicit_weights({2, 4}), 6);
    CHECK(first_discrepancy(a, b) == 4);  // weight-4 coefficients 2 vs 3
    QSeries c(5);
    CHECK_THROWS_AS(first_discrepancy(a, c), std::invalid_argument);
}

TEST_CASE("rank-2 orbifold departs from the free even character at weight 12") {
    QSeries orb = orbifold_character(1, 13);
    QSeries fre = free_character(GeneratorProfile::all_even_from_2(), 13);
    auto d = first_discrepancy(orb, fre);
    REQUIRE(d.has_value());
    CHECK(*d == 12);
    // the independent oracle pins the weight-12 dimension
    CHECK(orb[12] == brute_force_dim(1, 12));
    CHECK(orb[12] != fre[12]);
}

TEST_CASE("n = 2: orbifold and free even characters agree up to weight 13") {
    QSeries orb = orbifold_character(2, 13);
    QSeries fre = free_character(GeneratorProfile::all_even_from_2(), 13);
    CHECK(!first_discrepancy(orb, fre).has_value());
}

TEST_CASE("finite even profiles approximate the full even character from below") {
    QSeries full = free_character(GeneratorProfile::all_even_from_2(), 13);
    for (int top = 2; top <= 6; ++top) {
        std::vector<int> ws;
        for (int w = 2; w <= 2 * top; w += 2) ws.push_back(w);
        QSeries fin = free_character(GeneratorProfile::explicit_weights(ws), 13);
        auto d = first_discrepancy(fin, full);
        // agreement through weight 2*top + 1, dominated everywhere
        if (d) CHECK(*d >= 2 * top + 2);
        for (int w = 0; w <= 13; ++w) CHECK(fin[w] <= full[w]);
    }
}

TEST_CASE("orbifold coefficients are nonnegative and dominated by the Fock character") {
    for (int n = 1; n <= 2; ++n) {
        QSeries orb = orbifold_character(n, 10);
        QSeries fock = QSeries::one(10);
        for (int m = 1; m <= 10; ++m)
            for (int i = 0; i < 2 * n; ++i) fock.mul_inv_one_minus(m);
        for (int w = 0; w <= 10; ++w) {
            CHECK(orb[w] >= 0);
            CHECK(orb[w] <= fock[w]);
        }
    }
}

TEST_CASE("minimal even profile evidence at n = 1: generators up to weight 10") {
    QSeries orb = orbifold_character(1, 11);
    auto top = minimal_even_profile(orb);
    REQUIRE(top.has_value());
    CHECK(*top == 5);  // type with generators 2,4,6,8,10
}

TEST_CASE("resource guards raise typed errors") {
    CHECK_THROWS_AS(orbifold_character(2, 13, 10), ResourceError);
    CHECK_THROWS_AS(brute_force_dim(2, 8, 100), ResourceError);
    CHECK_THROWS_AS(orbifold_character(0, 4), std::invalid_argument);
}
