#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "biggl/gridcoeff.hpp"

#include <random>

using namespace biggl;

namespace {

Poly xl(int s) { return Poly(xlet(s)); }

}  // namespace

TEST_CASE("interpolation sums") {
    CHECK(lagrange_sum({Rat(0), Rat(1)}, 0) == 0);
    CHECK(lagrange_sum({Rat(0), Rat(1)}, 1) == 1);
    CHECK(lagrange_sum({Rat(0), Rat(1), Rat(2)}, 2) == 1);
    std::mt19937 rng(17);
    for (int it = 0; it < 20; ++it) {
        std::vector<Rat> A;
        int sz = 2 + int(rng() % 4);
        std::set<int> used;
        while (int(used.size()) < sz) used.insert(int(rng() % 19) - 9);
        for (int v : used) A.push_back(Rat(v));
        for (int k = 0; k + 1 < sz; ++k) CHECK(lagrange_sum(A, k) == 0);
        CHECK(lagrange_sum(A, sz - 1) == 1);
    }
    CHECK_THROWS(lagrange_sum({Rat(1), Rat(1)}, 0));
}

TEST_CASE("coefficient extraction basics") {
    // g = X1 X2, degrees (1,1), grid {0,1} x {0,1}.
    Poly g = xl(1) * xl(2);
    Grid grid = {{Rat(0), Rat(1)}, {Rat(0), Rat(1)}};
    CHECK(grid_coefficient(g, {xlet(1), xlet(2)}, {1, 1}, grid) == Poly(1));
    // g = X1^2, degrees (2,0), one-point second grid.
    Poly g2 = xl(1).pow(2);
    Grid grid2 = {{Rat(0), Rat(1), Rat(2)}, {Rat(5)}};
    CHECK(grid_coefficient(g2, {xlet(1), xlet(2)}, {2, 0}, grid2) == Poly(1));
    // Zero coefficient of an absent monomial.
    CHECK(grid_coefficient(g2, {xlet(1), xlet(2)}, {1, 1},
                           Grid{{Rat(0), Rat(1)}, {Rat(0), Rat(1)}}) == Poly(0));
    CHECK_THROWS(grid_coefficient(g2, {xlet(1)}, {1}, Grid{{Rat(0), Rat(1)}}));
}

TEST_CASE("coefficient extraction on random polynomials") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coeff(-6, 6), deg(0, 3), mdist(1, 3);
    for (int it = 0; it < 200; ++it) {
        int m = mdist(rng);
        std::vector<Var> vars;
        for (int s = 1; s <= m; ++s) vars.push_back(xlet(s));
        std::vector<int> degrees;
        for (int s = 0; s < m; ++s) degrees.push_back(deg(rng));
        // Random polynomial within the per-variable degree box.
        Poly g;
        int terms = 1 + int(rng() % 5);
        for (int t = 0; t < terms; ++t) {
            Mono mo;
            for (int s = 0; s < m; ++s) {
                int e = int(rng() % size_t(degrees[size_t(s)] + 1));
                if (e) mo = mo * Mono(vars[size_t(s)], e);
            }
            g += Poly::monomial(mo, Rat(coeff(rng)));
        }
        Grid grid;
        for (int s = 0; s < m; ++s) {
            std::vector<Rat> pts;
            for (int a = 0; a <= degrees[size_t(s)]; ++a) pts.push_back(Rat(a * 3 - 2));
            grid.push_back(pts);
        }
        Mono target;
        for (int s = 0; s < m; ++s)
            if (degrees[size_t(s)]) target = target * Mono(vars[size_t(s)], degrees[size_t(s)]);
        CHECK(grid_coefficient(g, vars, degrees, grid) == Poly(g.coefficient(target)));
    }
}

TEST_CASE("coefficient extraction with symbolic coefficients") {
    // Coefficients in the t variables pass through exactly.
    Poly g = xl(1).pow(2) * Poly(tv(1)) + xl(1) * (Poly(tv(2)) - Poly(1));
    Grid grid = {{Rat(-1), Rat(0), Rat(1)}};
    CHECK(grid_coefficient(g, {xlet(1)}, {2}, grid) == Poly(tv(1)));
}

TEST_CASE("vanishing test") {
    const int n = 2;
    std::vector<Poly> points = {Poly(tv(1)), Poly(tv(2))};
    // The zero polynomial vanishes.
    CHECK(vanishing_test(Poly(0), {xlet(1), xlet(2)}, n - 1, points));
    // Degree bound violation is rejected: (X1-t1)(X1-t2) has degree 2.
    Poly over = (xl(1) - points[0]) * (xl(1) - points[1]);
    CHECK_THROWS(vanishing_test(over, {xlet(1)}, n - 1, points));
    // Contrapositive sampling: a nonzero in-bound polynomial never vanishes
    // on the whole symbolic grid.
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int it = 0; it < 60; ++it) {
        Poly g;
        for (int e1 = 0; e1 <= n - 1; ++e1)
            for (int e2 = 0; e2 <= n - 1; ++e2)
                g += xl(1).pow(e1) * xl(2).pow(e2) * Rat(coeff(rng));
        if (g.is_zero()) continue;
        CHECK(!vanishing_test(g, {xlet(1), xlet(2)}, n - 1, points));
    }
    // A polynomial assembled from the grid factors vanishes at every grid
    // point, so the bound is what makes the test conclusive.
    Poly vanish = (xl(1) - points[0]) * (xl(1) - points[1]);
    for (auto& p : points) CHECK(vanish.subst(xlet(1), p).is_zero());
    std::vector<Poly> bigger = {Poly(tv(1)), Poly(tv(2)), Poly(tv(3))};
    CHECK(!vanishing_test(vanish, {xlet(1)}, n, bigger));
}
