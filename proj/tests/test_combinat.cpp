#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "biggl/combinat.hpp"

#include <algorithm>
#include <random>

using namespace biggl;

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(falling_factorial(0, 0) == 1);
    CHECK(falling_factorial(4, 3) == 24);
    CHECK(falling_factorial(4, 3) == factorial(3) * binomial(4, 3));
    CHECK(falling_factorial(2, 5) == 0);  // k > m >= 0
}

TEST_CASE("stirling numbers of the second kind") {
    CHECK(stirling2(4, 4) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(1, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
    // Recurrence S(k,l) = l S(k-1,l) + S(k-1,l-1).
    for (int k = 1; k <= 8; ++k)
        for (int l = 1; l <= k; ++l)
            CHECK(stirling2(k, l) == Int(l) * stirling2(k - 1, l) + stirling2(k - 1, l - 1));
    // Row sums against a direct count of set partitions of a 3-set.
    CHECK(stirling2(3, 1) + stirling2(3, 2) + stirling2(3, 3) == 5);
}

TEST_CASE("enumeration sizes") {
    CHECK(subsets(5, 2).size() == 10);
    CHECK(distinct_tuples(5, 2).size() == 20);
    CHECK(all_tuples(3, 2).size() == 9);
    CHECK(subsets(4, 0).size() == 1);
    // Lexicographic order of subsets.
    auto s = subsets(4, 2);
    CHECK(std::is_sorted(s.begin(), s.end()));
}

TEST_CASE("sgn_pair basics") {
    CHECK(sgn_pair({1, 2}, {2, 1}) == -1);
    CHECK(sgn_pair({1, 2}, {1, 3}) == 0);
    CHECK(sgn_pair({1}, {1}) == 1);
    CHECK_THROWS(sgn_pair({1, 2}, {1}));
    CHECK_THROWS(sgn_pair({1, 1}, {1, 2}));
}

TEST_CASE("sgn_pair agrees with permutation sign on [n]") {
    for (int n = 1; n <= 4; ++n) {
        Tuple id(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) id[size_t(i)] = i + 1;
        for_each_permutation(n, [&](const Tuple& tau, int sgn) {
            Tuple J(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; ++i) J[size_t(i)] = tau[size_t(i)];
            CHECK(sgn_pair(id, J) == sgn);
        });
    }
}

TEST_CASE("sgn_pair skew symmetry") {
    for (int m = 2; m <= 5; ++m) {
        for (int p = 1; p <= std::min(m, 4); ++p) {
            for (auto& I : distinct_tuples(m, p)) {
                for (auto& J : distinct_tuples(m, p)) {
                    int base = sgn_pair(I, J);
                    for_each_permutation(p, [&](const Tuple& sigma, int s1) {
                        for_each_permutation(p, [&](const Tuple& tau, int s2) {
                            CHECK(sgn_pair(apply_perm(sigma, I), apply_perm(tau, J)) ==
                                  s1 * s2 * base);
                        });
                    });
                }
            }
        }
    }
}

TEST_CASE("sgn_block") {
    CHECK(sgn_block({{1}, {2}}, {{1}, {2}}) == 1);
    CHECK(sgn_block({{1}, {2}}, {{2}, {1}}) == -1);
    CHECK(sgn_block({{1, 3}, {2}}, {{2, 3}, {1}}) == sgn_pair({1, 3, 2}, {2, 3, 1}));
    CHECK(sgn_block({{1, 3}, {2}}, {{2, 3}, {1}}) == -1);
    CHECK_THROWS(sgn_block({{1, 2}, {2}}, {{1}, {2, 3}}));
}

TEST_CASE("epsilon examples") {
    CHECK(epsilon({1, 2}, {1, 2}, {1}, {1}) == 1);
    CHECK(epsilon({1, 2}, {2, 1}, {1}, {1}) == -1);
    CHECK(epsilon({1, 2}, {1, 3}, {1}, {1}) == 0);
    CHECK_THROWS(epsilon({1}, {1}, {1, 2}, {1, 2}));
}

TEST_CASE("epsilon equals the exhaustive-search value") {
    for (int m = 2; m <= 4; ++m) {
        for (int p = 1; p <= 3; ++p) {
            for (int q = 0; q <= std::min(p, 2); ++q) {
                for (auto& I1 : distinct_tuples(m, p))
                    for (auto& J1 : distinct_tuples(m, p))
                        for (auto& I2 : distinct_tuples(m, q))
                            for (auto& J2 : distinct_tuples(m, q))
                                CHECK(epsilon(I1, J1, I2, J2) == epsilon_search(I1, J1, I2, J2));
            }
        }
    }
}

TEST_CASE("epsilon skew symmetry") {
    const int m = 4, p = 3, q = 2;
    std::mt19937 rng(20240811);
    auto i1s = distinct_tuples(m, p);
    auto i2s = distinct_tuples(m, q);
    for (int iter = 0; iter < 40; ++iter) {
        const Tuple& I1 = i1s[rng() % i1s.size()];
        const Tuple& J1 = i1s[rng() % i1s.size()];
        const Tuple& I2 = i2s[rng() % i2s.size()];
        const Tuple& J2 = i2s[rng() % i2s.size()];
        int base = epsilon(I1, J1, I2, J2);
        for_each_permutation(p, [&](const Tuple& s1, int sg1) {
            for_each_permutation(q, [&](const Tuple& s2, int sg2) {
                CHECK(epsilon(apply_perm(s1, I1), J1, apply_perm(s2, I2), J2) ==
                      sg1 * sg2 * base);
            });
        });
    }
}
