#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "biggl/ratfun.hpp"
#include "biggl/symfunc.hpp"

#include <map>
#include <random>

using namespace biggl;

namespace {

std::vector<Var> tvars(int n) {
    std::vector<Var> v;
    for (int i = 1; i <= n; ++i) v.push_back(tv(i));
    return v;
}

// Evaluate a polynomial in the p[] (resp. e[]) symbols at the actual
// symmetric polynomials of the given variables.
Poly eval_in_p_basis(const Poly& f, const std::vector<Var>& vars) {
    std::map<Var, Poly> sub;
    for (int r = 0; r <= 12; ++r) sub.emplace(pv(r), power_sum(r, vars));
    return f.subst(sub);
}

Poly eval_in_e_basis(const Poly& f, const std::vector<Var>& vars) {
    std::map<Var, Poly> sub;
    for (int k = 0; k <= 12; ++k) sub.emplace(esv(k), elementary_sym(k, vars));
    return f.subst(sub);
}

}  // namespace

TEST_CASE("symmetric polynomial basics") {
    CHECK(elementary_sym(1, tvars(2)) == Poly(tv(1)) + Poly(tv(2)));
    CHECK(power_sum(2, tvars(2)) == Poly(tv(1)).pow(2) + Poly(tv(2)).pow(2));
    std::vector<Var> two = {tv(4), tv(7)};
    Poly h2 = complete_sym(2, two);
    CHECK(h2 == Poly(tv(4)).pow(2) + Poly(tv(4)) * Poly(tv(7)) + Poly(tv(7)).pow(2));
    CHECK(elementary_sym(3, tvars(2)).is_zero());
    CHECK(complete_sym(0, two) == Poly(1));
    CHECK(power_sum(0, tvars(3)) == Poly(3));
}

TEST_CASE("basis change formulas evaluate correctly") {
    // Against actual symmetric polynomials in up to four variables.
    for (int n = 1; n <= 4; ++n) {
        auto vars = tvars(n);
        for (int k = 1; k <= 6; ++k) {
            CHECK(eval_in_p_basis(girard_waring_e_from_p(k), vars) == elementary_sym(k, vars));
            CHECK(eval_in_e_basis(girard_waring_p_from_e(k, n), vars) == power_sum(k, vars));
        }
    }
    // e_2 = (p_1^2 - p_2)/2 (Newton) and p_2 = e_1^2 - 2 e_2.
    Poly e2 = girard_waring_e_from_p(2);
    CHECK(e2 == (Poly(pv(1)).pow(2) - Poly(pv(2))) / Rat(2));
    Poly p2 = girard_waring_p_from_e(2, 2);
    CHECK(p2 == Poly(esv(1)).pow(2) - Poly(esv(2)) * Rat(2));
}

TEST_CASE("round trip between the two bases") {
    for (int N = 1; N <= 4; ++N) {
        for (int k = 1; k <= 6; ++k) {
            // Substituting the p-expansions of e into p_from_e returns p_k,
            // verified by evaluation in N variables.
            auto vars = tvars(N);
            Poly p_of_e = girard_waring_p_from_e(k, N);
            std::map<Var, Poly> sub;
            for (int j = 1; j <= N; ++j) sub.emplace(esv(j), girard_waring_e_from_p(j));
            Poly roundtrip = p_of_e.subst(sub);
            CHECK(eval_in_p_basis(roundtrip, vars) == power_sum(k, vars));
        }
    }
}

TEST_CASE("power sums through a truncated basis") {
    CHECK(theta_poly(2, 2) == Poly(thv(2)));
    CHECK(theta_poly(0, 3) == Poly(3));
    Poly expect = Poly(thv(1)) * Poly(thv(2)) * Rat(3, 2) - Poly(thv(1)).pow(3) * Rat(1, 2);
    CHECK(theta_poly(3, 2) == expect);
    // theta(k, N) evaluated at the power sums of N variables gives p_k.
    for (int N = 1; N <= 3; ++N) {
        auto vars = tvars(N);
        for (int k = 0; k <= N + 3; ++k) {
            std::map<Var, Poly> sub;
            for (int j = 1; j <= N; ++j) sub.emplace(thv(j), power_sum(j, vars));
            CHECK(theta_poly(k, N).subst(sub) == power_sum(k, vars));
        }
    }
}

TEST_CASE("plethystic substitution") {
    // p_2 with mu = (1,1,0).
    CHECK(plethysm_eval(Poly(pv(2)), {1, 1, 0}, 3) ==
          Poly(tv(1)).pow(2) + Poly(tv(2)).pow(2));
    // p_1 with mu = (2,1) and shift (t1 - t2): 2t1 + t2 + t1 - t2 = 3t1.
    Poly shift = Poly(tv(1)) - Poly(tv(2));
    CHECK(plethysm_eval(Poly(pv(1)), {2, 1}, 2, shift) == Poly(tv(1)) * Rat(3));
    // e_2 = (p1^2-p2)/2 at mu=(2,0): t1^2.
    CHECK(plethysm_eval(girard_waring_e_from_p(2), {2, 0}, 2) == Poly(tv(1)).pow(2));
    CHECK_THROWS(plethysm_eval(Poly(pv(1)), {1, 2}, 3));
}

TEST_CASE("rational functions normalize") {
    Poly u((uv()));
    RatFun a(u * u - Poly(1), u - Poly(1));  // (u^2-1)/(u-1) = u+1
    CHECK(a == RatFun(u + Poly(1)));
    RatFun b(u * Rat(2), u.pow(2) * Rat(4));  // 2u / 4u^2 = (1/2)/(u/1)...
    CHECK(b.num() == Poly(Rat(1, 2)));
    CHECK(b.den() == u);
    RatFun q(u - Poly(2), u + Poly(5));
    CHECK(q * (RatFun(Poly(1)) / q) == RatFun(Poly(1)));
    CHECK((q - q).is_zero());
    CHECK_THROWS(RatFun(u, Poly(0)));
    RatFun sum = RatFun(Poly(1), u) + RatFun(Poly(1), u + Poly(1)); // (2u+1)/(u^2+u)
    CHECK(sum.num() == u * Rat(2) + Poly(1));
    CHECK(sum.den() == u.pow(2) + u);
}
