#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "biggl/symfunc.hpp"
#include "biggl/sympower.hpp"

using namespace biggl;

namespace {

std::vector<Var> tvars(int n) {
    std::vector<Var> v;
    for (int i = 1; i <= n; ++i) v.push_back(tv(i));
    return v;
}

std::vector<std::string> relation_strings(const PresentationRing& ring) {
    std::vector<std::string> out;
    for (auto& r : ring.relations) out.push_back(r.str(PrintStyle::Plain));
    return out;
}

}  // namespace

TEST_CASE("weight diagram") {
    CHECK(weight_diagram(2, 2) ==
          std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(weight_diagram(3, 1) ==
          std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(weight_diagram(3, 2).size() == 6);
    CHECK(weight_diagram(1, 0) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("diagonal generator values") {
    // P-hat_1 at mu=(2,1), n=2.
    WeightFunc p1 = gen_phat(1, 2, 3);
    // weights of (n=2, m=3): (3,0),(2,1),(1,2),(0,3)
    CHECK(p1.value(1) == Poly(tv(1)) * Rat(2) + Poly(tv(2)));
    // F-hat_{1,1} at mu: mu_1 t_2 + mu_2 t_1 for n=2.
    WeightFunc f11 = gen_fhat(1, 1, 2, 2);
    CHECK(f11.value(0) == Poly(tv(2)) * Rat(2));            // mu=(2,0)
    CHECK(f11.value(1) == Poly(tv(2)) + Poly(tv(1)));       // mu=(1,1)
    // F-hat_{p,0} is the constant elementary polynomial.
    CHECK(gen_fhat(2, 0, 3, 2) == WeightFunc::constant(3, 2, elementary_sym(2, tvars(3))));
    // M-hat_1 = -P-hat_1 + m c1.
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            WeightFunc lhs = gen_mhat(1, n, m);
            WeightFunc rhs =
                WeightFunc::constant(n, m, elementary_sym(1, tvars(n)) * Rat(m)) -
                gen_phat(1, n, m);
            CHECK(lhs == rhs);
        }
    }
    // M-hat_2 = P-hat_2 - c1 P-hat_1 + m c2.
    const int n = 3, m = 2;
    WeightFunc m2 = gen_mhat(2, n, m);
    WeightFunc rhs = gen_phat(2, n, m) -
                     WeightFunc::constant(n, m, elementary_sym(1, tvars(n))) * gen_phat(1, n, m) +
                     WeightFunc::constant(n, m, elementary_sym(2, tvars(n)) * Rat(m));
    CHECK(m2 == rhs);
}

TEST_CASE("vector representation model") {
    // At m=1 the k-th power generator sends the i-th basis weight to t_i^k,
    // and the defining degree-n identity holds pointwise.
    for (int n = 2; n <= 3; ++n) {
        WeightFunc T = gen_phat(1, n, 1);
        for (size_t idx = 0; idx < T.size(); ++idx) CHECK(T.value(idx) == Poly(tv(int(idx) + 1)));
        WeightFunc acc(n, 1);
        for (int k = 0; k <= n; ++k) {
            Rat sgn = k % 2 == 0 ? 1 : -1;
            WeightFunc ck = WeightFunc::constant(n, 1, elementary_sym(k, tvars(n)) * sgn);
            WeightFunc tpow = WeightFunc::constant(n, 1, Poly(1));
            for (int e = 0; e < n - k; ++e) tpow = tpow * T;
            acc = acc + ck * tpow;
        }
        CHECK(acc.is_zero());
        CHECK(gen_phat(2, n, 1) == T * T);
    }
}

TEST_CASE("operators are diagonal with the predicted eigenvalues") {
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int q = 0; q <= 1; ++q)
                for (int p = 0; p + q <= n; ++p) {
                    Report rep = consistency_bigelem_vs_weightfunc(p, q, n, m);
                    INFO(rep.text());
                    CHECK(rep.pass());
                }
}

TEST_CASE("defining relations evaluate to zero") {
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            Report rep = relation_check_capelli_style(n, m);
            INFO(rep.text());
            CHECK(rep.pass());
        }
}

TEST_CASE("presentation sizes and soundness") {
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= (n == 2 ? 4 : 3); ++m) {
            for (Basis b : {Basis::P, Basis::M}) {
                for (AlgebraKind a : {AlgebraKind::GL, AlgebraKind::SL}) {
                    PresentationRing ring = present(n, m, b, a);
                    CHECK(!ring.relations.empty());
                    Report rep = present_soundness_check(n, m, b, a);
                    INFO(rep.text());
                    CHECK(rep.pass());
                }
            }
        }
    }
    CHECK_THROWS(present(3, 4, Basis::P, AlgebraKind::GL));
}

TEST_CASE("transcribed presentations: rank two, traceless") {
    // Product form: M1 prod_j (M1^2 + (m-2j)^2 c2) for even m,
    // prod_j (M1^2 + (m-2j)^2 c2) for odd m.
    CHECK(relation_strings(present(2, 1, Basis::M, AlgebraKind::SL)) ==
          std::vector<std::string>{"M1^2+c2"});
    CHECK(relation_strings(present(2, 2, Basis::M, AlgebraKind::SL)) ==
          std::vector<std::string>{"M1^3+4*c2*M1"});
    CHECK(relation_strings(present(2, 3, Basis::M, AlgebraKind::SL)) ==
          std::vector<std::string>{"M1^4+10*c2*M1^2+9*c2^2"});
    CHECK(relation_strings(present(2, 4, Basis::M, AlgebraKind::SL)) ==
          std::vector<std::string>{"M1^5+20*c2*M1^3+64*c2^2*M1"});
    // Same relations produced degree by degree from the factored form.
    for (int m = 1; m <= 4; ++m) {
        Poly prod = m % 2 == 0 ? Poly(mgen(1)) : Poly(1);
        for (int j = 0; 2 * j < m; ++j) {
            int w = m - 2 * j;
            prod = prod * (Poly(mgen(1)).pow(2) + Poly(cv(2)) * Rat(w * w));
        }
        CHECK(present(2, m, Basis::M, AlgebraKind::SL).relations ==
              std::vector<Poly>{prod.integer_cleared()});
    }
}

TEST_CASE("transcribed presentations: rank three") {
    CHECK(relation_strings(present(3, 2, Basis::P, AlgebraKind::GL)) ==
          std::vector<std::string>{
              "P1^3-3*P1*P2-2*c2*P1+2*c1*P2+4*c3",
              "P1^4-c1*P1^3-2*P1^2*P2+3*c1*P1*P2+2*c3*P1-P2^2-2*c2*P2"});
    CHECK(relation_strings(present(3, 2, Basis::M, AlgebraKind::GL)) ==
          std::vector<std::string>{
              "M1^3-3*c1*M1^2-3*M1*M2+2*c1^2*M1+4*c2*M1+4*c1*M2-4*c1*c2-4*c3",
              "M1^2*M2-3*c1*M1*M2+2*c3*M1-M2^2+2*c1^2*M2+2*c2*M2-4*c1*c3"});
    CHECK(relation_strings(present(3, 2, Basis::M, AlgebraKind::SL)) ==
          std::vector<std::string>{
              "M1^3-3*M1*M2+2*c2*M1-4*c3",
              "9*M1^2*M2+6*c2*M1^2+18*c3*M1-9*M2^2+6*c2*M2+8*c2^2"});
    CHECK(relation_strings(present(3, 3, Basis::P, AlgebraKind::GL)) ==
          std::vector<std::string>{
              "c2*P1-c1*P2+P3-3*c3",
              "P1^4-6*P1^2*P2+8*P1*P3-6*c3*P1+3*P2^2+6*c2*P2-6*c1*P3",
              "P1^5-c1*P1^4-5*P1^3*P2+6*c1*P1^2*P2+5*P1^2*P3-8*c1*P1*P3-3*c1*P2^2+5*P2*P3-"
              "6*c3*P2+6*c2*P3"});
    CHECK(relation_strings(present(3, 3, Basis::M, AlgebraKind::SL)) ==
          std::vector<std::string>{
              "M1^4-6*M1^2*M2+4*c2*M1^2-18*c3*M1+3*M2^2-6*c2*M2",
              "M1^3*M2+c2*M1^3+3*c3*M1^2-3*M1*M2^2+c2*M1*M2+4*c2^2*M1-9*c3*M2"});
}

TEST_CASE("symmetric-function embedding") {
    // p_k maps to the k-th power generator.
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int k = 1; k <= 3; ++k) CHECK(upsilon(Poly(pv(k)), n, m) == gen_phat(k, n, m));
    // Constants map to constants; e_1 of the letters equals the first
    // power generator.
    CHECK(upsilon(Poly(cv(2)), 2, 2) ==
          WeightFunc::constant(2, 2, elementary_sym(2, tvars(2))));
    CHECK(upsilon(girard_waring_e_from_p(1), 2, 2) == gen_phat(1, 2, 2));
    CHECK_THROWS(upsilon(Poly(tv(1)), 2, 2));
}

TEST_CASE("embedding is multiplicative and injective") {
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            Report mult = upsilon_multiplicativity_check(n, m, 50, 20240601);
            INFO(mult.text());
            CHECK(mult.pass());
            Report rank = upsilon_injectivity_check(n, m);
            INFO(rank.text());
            CHECK(rank.pass());
        }
    }
    // Concrete ranks.
    auto rank_of = [](int n, int m) {
        Report rep = upsilon_injectivity_check(n, m);
        return rep.pass();
    };
    CHECK(rank_of(2, 2));  // rank 3
    CHECK(rank_of(2, 1));  // rank 2
    CHECK(rank_of(3, 2));  // rank 6
}

TEST_CASE("induced operator: boundary forms") {
    // g = 1: pure directional derivative of the scalar part.
    const int n = 2, m = 2;
    Poly f = Poly(pv(2));
    WeightFunc out = dhat_plethystic(f, Poly(1), n, m);
    for (size_t idx = 0; idx < out.size(); ++idx) {
        auto& mu = out.weights()[idx];
        Poly expect;
        Poly base = plethysm_eval(f, {1, 1}, n);
        for (int i = 1; i <= n; ++i) expect += base.derivative(tv(i)) * Rat(mu[size_t(i) - 1]);
        CHECK(out.value(idx) == expect);
    }
    // f = 1, g = p_1: the constant m^2 + (n-1)m.
    for (int nn = 1; nn <= 3; ++nn) {
        for (int mm = 1; mm <= 3; ++mm) {
            WeightFunc d = dhat_plethystic(Poly(1), Poly(pv(1)), nn, mm);
            CHECK(d == WeightFunc::constant(nn, mm, Poly(Rat(mm * mm + (nn - 1) * mm))));
        }
    }
    // n = 1: no off-diagonal differences survive.
    WeightFunc d1 = dhat_plethystic(Poly(1), Poly(pv(2)), 1, 2);
    CHECK(d1.value(0) == Poly(tv(1)) * Rat(8));  // mu=(2): derivative term only
}

TEST_CASE("induced operator matches the full construction") {
    std::vector<std::vector<int>> lists = {{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 2}};
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (auto& alphas : lists) {
                Report rep = dhat_consistency(alphas, n, m);
                INFO(rep.text());
                CHECK(rep.pass());
            }
        }
    }
}

TEST_CASE("polarized power sums") {
    const int n = 2;
    // Reduction produces only in-range generators.
    Poly red = di_normalize(Poly(pab(4, 0)), n);
    for (auto& t : red.terms())
        for (auto& f : t.first.factors) {
            CHECK(f.first.i() <= (f.first.j() == 0 ? n : n - 1));
        }
    // Reduction is evaluation-faithful.
    for (auto& mu : weight_diagram(n, 2)) {
        CHECK(di_eval(red, mu, n) == power_sum(4, tvars(n)));
        Poly red1 = di_normalize(Poly(pab(3, 1)), n);
        Poly direct;
        for (int i = 1; i <= n; ++i)
            direct += Poly::monomial(Mono(tv(i), 3), Rat(mu[size_t(i) - 1]));
        CHECK(di_eval(red1, mu, n) == direct);
    }
    // Image of the pure-x power sums.
    for (int a = 1; a <= n; ++a) {
        CHECK(dhat_xy(Poly(pab(a, 0)), n) == Poly(pab(a - 1, 1)) * Rat(a));
    }
    // Constants map to zero.
    CHECK(dhat_xy(Poly(7), n).is_zero());
}

TEST_CASE("polarized model induces the weight-diagram operator") {
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 2; ++m) {
            Report rep = dhat_xy_consistency(n, m, 3);
            INFO(rep.text());
            CHECK(rep.pass());
        }
    }
}
