#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "biggl/poly.hpp"

#include <random>

using namespace biggl;

namespace {

Poly random_poly(std::mt19937& rng, const std::vector<Var>& vars, int max_terms, int max_deg) {
    Poly p;
    std::uniform_int_distribution<int> nt(1, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        Mono m;
        for (auto v : vars) {
            int e = deg(rng);
            if (e > 0) m = m * Mono(v, e);
        }
        p += Poly::monomial(m, Rat(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic and canonical text") {
    Poly a = Poly(yv(1, 1)) * Poly(yv(2, 2)) - Poly(yv(1, 2)) * Poly(yv(2, 1));
    CHECK(a.str() == "y[1][1]*y[2][2] - y[1][2]*y[2][1]");
    Poly e1 = Poly(tv(1)) + Poly(tv(2));
    CHECK(e1.str() == "t[1] + t[2]");
    CHECK((e1 - e1).is_zero());
    CHECK(Poly(Rat(0)).str() == "0");
    CHECK((Poly(tv(1)) * Rat(2) - Poly(tv(1)) * Rat(2)).str() == "0");
    Poly c = Poly(Rat(1, 2)) * Poly(tv(1)) + Poly(Rat(3));
    CHECK(c.str() == "1/2*t[1] + 3");
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(7);
    std::vector<Var> vars = {tv(1), tv(2), yv(1, 1)};
    for (int it = 0; it < 60; ++it) {
        Poly a = random_poly(rng, vars, 3, 2);
        Poly b = random_poly(rng, vars, 3, 2);
        Poly c = random_poly(rng, vars, 3, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("poly_det") {
    std::vector<std::vector<Poly>> m = {{Poly(yv(1, 1)), Poly(yv(1, 2))},
                                        {Poly(yv(2, 1)), Poly(yv(2, 2))}};
    Poly d = poly_det(m);
    CHECK(d == Poly(yv(1, 1)) * Poly(yv(2, 2)) - Poly(yv(1, 2)) * Poly(yv(2, 1)));

    std::vector<std::vector<Poly>> id3(3, std::vector<Poly>(3, Poly(0)));
    for (int i = 0; i < 3; ++i) id3[size_t(i)][size_t(i)] = Poly(1);
    CHECK(poly_det(id3) == Poly(1));

    Poly a = Poly(alv(1));
    std::vector<std::vector<Poly>> rank1 = {{a, a}, {a, a}};
    CHECK(poly_det(rank1).is_zero());

    std::vector<std::vector<Poly>> bad = {{a, a}};
    CHECK_THROWS(poly_det(bad));
}

TEST_CASE("substitution and evaluation") {
    Poly p = Poly(tv(1)).pow(2) + Poly(tv(2)) * Rat(3);
    Poly q = p.subst(tv(1), Poly(tv(2)) + Poly(1));
    CHECK(q == Poly(tv(2)).pow(2) + Poly(tv(2)) * Rat(5) + Poly(1));
    std::map<Var, Rat> vals{{tv(1), Rat(2)}, {tv(2), Rat(-1)}};
    CHECK(p.eval(vals) == Rat(1));
    CHECK(p.derivative(tv(1)) == Poly(tv(1)) * Rat(2));
}

TEST_CASE("exact division by a difference of variables") {
    Poly num = Poly(tv(1)).pow(3) - Poly(tv(2)).pow(3);
    Poly q = num.div_exact_linear(tv(1), tv(2));
    CHECK(q == Poly(tv(1)).pow(2) + Poly(tv(1)) * Poly(tv(2)) + Poly(tv(2)).pow(2));
    Poly bad = Poly(tv(1)).pow(2) + Poly(tv(2));
    CHECK_THROWS(bad.div_exact_linear(tv(1), tv(2)));

    std::mt19937 rng(11);
    std::vector<Var> vars = {tv(1), tv(2), tv(3)};
    Poly diff = Poly(tv(1)) - Poly(tv(2));
    for (int it = 0; it < 40; ++it) {
        Poly f = random_poly(rng, vars, 4, 3);
        Poly prod = f * diff;
        CHECK(prod.div_exact_linear(tv(1), tv(2)) == f);
    }
}

TEST_CASE("integer clearing and lex leading term") {
    Poly p = Poly(pgen(1)).pow(3) * Rat(-1, 2) + Poly(pgen(1)) * Poly(cv(2)) * Rat(-2);
    Poly cleared = p.integer_cleared();
    CHECK(cleared == Poly(pgen(1)).pow(3) + Poly(pgen(1)) * Poly(cv(2)) * Rat(4));
    auto [m, c] = cleared.lex_leading();
    CHECK(c == 1);
    CHECK(m.exponent(pgen(1)) == 3);
    CHECK(cleared.str(PrintStyle::Plain) == "P1^3+4*c2*P1");
}

TEST_CASE("lex reduction") {
    // Reduce x^2 by (x^2 - y): remainder y.
    Poly f = Poly(pgen(1)).pow(2);
    Poly g = Poly(pgen(1)).pow(2) - Poly(pgen(2));
    CHECK(lex_reduce(f, {g}) == Poly(pgen(2)));
    // Already reduced inputs are returned unchanged.
    Poly h = Poly(pgen(2)).pow(3) + Poly(cv(1));
    CHECK(lex_reduce(h, {g}) == h);
}

TEST_CASE("falling factorial polynomial") {
    Poly z = falling_factorial_poly(zv(), 3);
    Poly expect = Poly(zv()) * (Poly(zv()) - Poly(1)) * (Poly(zv()) - Poly(2));
    CHECK(z == expect);
    CHECK(falling_factorial_poly(zv(), 0) == Poly(1));
}

TEST_CASE("order of sum over subsets is immaterial") {
    std::mt19937 rng(13);
    std::vector<Var> vars = {tv(1), tv(2)};
    std::vector<Poly> parts;
    for (int i = 0; i < 8; ++i) parts.push_back(random_poly(rng, vars, 3, 2));
    Poly forward, shuffled;
    for (auto& p : parts) forward += p;
    std::vector<size_t> idx = {5, 2, 7, 0, 3, 6, 1, 4};
    for (auto i : idx) shuffled += parts[i];
    CHECK(forward == shuffled);
}
