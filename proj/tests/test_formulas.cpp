#include "doctest.h"
#include "mp/formulas.hpp"
#include "mp/multipole.hpp"

using namespace mp;

TEST_CASE("sigma anchors") {
    CHECK(sigma(1) == 0);
    CHECK(sigma(2) == 1);
    CHECK(sigma(3) == 1);
    CHECK(sigma(4) == 4);
    CHECK(sigma(5) == 10);
    CHECK(sigma(6) == 31);
    CHECK_THROWS_AS(sigma(0), MultipoleError);
}

TEST_CASE("sigma recurrence and superadditivity") {
    CHECK(sigma_recurrence_check(12));
    CHECK(sigma(4) == 2 * sigma(3) + 3 * sigma(2) - 1);
    CHECK(sigma_superadditive_check(20));
    CHECK(sigma(2) * sigma(2) < sigma(4));
    CHECK(sigma(3) * sigma(3) < sigma(6));
    CHECK_THROWS_AS(sigma_recurrence_check(3), MultipoleError);
}

TEST_CASE("rho anchors") {
    CHECK(rho(2) == 1);
    CHECK(rho(5) == 3);
    CHECK(rho(6) == 5);
    CHECK_THROWS_AS(rho(1), MultipoleError);
}

TEST_CASE("tree and cycle counts") {
    CHECK(tree_count(3) == 1);
    CHECK(tree_count(4) == 2);
    CHECK(tree_count(10) == 128);
    CHECK(cycle_count(1) == 0);
    CHECK(cycle_count(3) == 1);
    CHECK(cycle_count(6) == 11);
    CHECK(cycle_coloring_count(3) == 6);
}

TEST_CASE("forest counts") {
    CHECK(forest_count(0, 2) == 1);
    CHECK(forest_count(0, 6) == 5);
    CHECK(forest_count(1, 7) == 9);
    CHECK(forest_count(2, 4) == 2);
    CHECK_THROWS_AS(forest_count(1, 4), MultipoleError);  // parity
    CHECK_THROWS_AS(forest_count(5, 5), MultipoleError);  // n > m-2
}

TEST_CASE("forest routes agree") {
    for (int m = 2; m <= 12; ++m) {
        for (int n = m % 2; n <= m - 2; n += 2) {
            BigInt closed = forest_count(n, m);
            CHECK(closed == forest_count_recurrence(n, m));
            int k = (m - n) / 2 - 1;
            if (n >= 1 && k >= 0) CHECK(closed == forest_count_binomial(n, m, k));
        }
    }
}

TEST_CASE("forest monotonicity in n") {
    for (int m = 2; m <= 14; ++m) {
        for (int n = m % 2; n + 2 <= m - 2; n += 2)
            CHECK(forest_count(n, m) <= forest_count(n + 2, m));
    }
}

TEST_CASE("rho equals the forest boundary column") {
    for (int m = 2; m <= 14; ++m)
        CHECK(rho(m) == forest_count(m % 2, m));
}

TEST_CASE("integrality up to m=64") {
    for (int m = 1; m <= 64; ++m) {
        CHECK_NOTHROW(sigma(m));
        if (m >= 2) CHECK_NOTHROW(rho(m));
        if (m >= 3) CHECK_NOTHROW(tree_count(m));
        CHECK_NOTHROW(cycle_count(m));
    }
}

TEST_CASE("forest table") {
    auto rows = forest_table(8);
    auto lookup = [&](int n, int m) -> const ForestTableRow* {
        for (const auto& r : rows)
            if (r.n == n && r.m == m) return &r;
        return nullptr;
    };
    CHECK(lookup(0, 2)->value == 1);
    CHECK(lookup(0, 4)->value == 2);
    CHECK(lookup(0, 6)->value == 5);
    CHECK(lookup(0, 8)->value == 14);
    for (int m = 2; m <= 6; ++m)
        CHECK(lookup(m - 2, m)->value == (m < 4 ? BigInt(1) : tree_count(m)));
    auto* diag = lookup(5, 5);
    REQUIRE(diag != nullptr);
    CHECK(diag->cycle_diagonal);
    CHECK(diag->value == cycle_count(5));
}

TEST_CASE("known constants") {
    const auto& k = known_constants();
    CHECK(k.mu.at(6) == 5);
    CHECK(k.v_exact.at(5) == 5);
    CHECK(k.v_lower.at(6) == 12);
    CHECK(k.n_upper(6) == 20);
    CHECK(k.n_lower(5) == 7);
}
