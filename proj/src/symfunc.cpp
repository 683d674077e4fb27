#include "biggl/symfunc.hpp"

#include "biggl/combinat.hpp"

#include <map>
#include <stdexcept>

namespace biggl {

Poly elementary_sym(int p, const std::vector<Var>& vars) {
    if (p < 0 || p > int(vars.size())) return Poly(0);
    Poly out;
    for (auto& s : subsets(int(vars.size()), p)) {
        Mono m;
        for (int idx : s) m = m * Mono(vars[size_t(idx) - 1]);
        out.add_term(m, 1);
    }
    return out;
}

Poly power_sum(int r, const std::vector<Var>& vars) {
    if (r == 0) return Poly(Rat(long(vars.size())));
    Poly out;
    for (auto v : vars) out.add_term(Mono(v, r), 1);
    return out;
}

Poly complete_sym(int r, const std::vector<Var>& vars) {
    if (r < 0) return Poly(0);
    Poly out;
    std::vector<int> exp(vars.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
        if (idx + 1 == vars.size()) {
            exp[idx] = left;
            Mono m;
            for (size_t i = 0; i < vars.size(); ++i)
                if (exp[i] > 0) m = m * Mono(vars[i], exp[i]);
            out.add_term(m, 1);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exp[idx] = e;
            rec(idx + 1, left - e);
        }
    };
    if (vars.empty()) return r == 0 ? Poly(1) : Poly(0);
    rec(0, r);
    return out;
}

void for_each_weighted_partition(int total, int len,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> i(size_t(len), 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == len) {
            if (left == 0) fn(i);
            return;
        }
        int w = idx + 1;
        for (int e = 0; e * w <= left; ++e) {
            i[size_t(idx)] = e;
            rec(idx + 1, left - e * w);
        }
        i[size_t(idx)] = 0;
    };
    if (len <= 0) {
        if (total == 0) fn({});
        return;
    }
    rec(0, total);
}

Poly girard_waring_e_from_p(int k) {
    if (k == 0) return Poly(1);
    Poly out;
    for_each_weighted_partition(k, k, [&](const std::vector<int>& i) {
        int isum = 0;
        Rat coeff = 1;
        Poly term(1);
        for (int j = 1; j <= k; ++j) {
            int ij = i[size_t(j - 1)];
            isum += ij;
            coeff /= Rat(factorial(ij));
            if (ij > 0) term = term * (Poly(pv(j)) / Rat(j)).pow(ij);
        }
        if (isum % 2 == 1) coeff = -coeff;
        out += term * coeff;
    });
    if (k % 2 == 1) out = -out;
    return out;
}

Poly girard_waring_p_from_e(int k, int N) {
    if (k == 0) return Poly(Rat(N));
    Poly out;
    for_each_weighted_partition(k, N, [&](const std::vector<int>& i) {
        int isum = 0, even_sum = 0;
        Rat coeff = 1;
        Poly term(1);
        for (int j = 1; j <= N; ++j) {
            int ij = i[size_t(j - 1)];
            isum += ij;
            if (j % 2 == 0) even_sum += ij;
            coeff /= Rat(factorial(ij));
            if (ij > 0) term = term * Poly(esv(j)).pow(ij);
        }
        coeff *= Rat(factorial(isum - 1));
        if (even_sum % 2 == 1) coeff = -coeff;
        out += term * coeff;
    });
    return out * Rat(k);
}

Poly theta_poly(int k, int N) {
    if (k < 0) throw std::invalid_argument("theta_poly: negative index");
    if (N < 1) throw std::invalid_argument("theta_poly: need at least one variable");
    if (k == 0) return Poly(Rat(N));
    if (k <= N) return Poly(thv(k));
    // p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... +- e_N p_{k-N} once k > N.
    std::vector<Poly> theta(size_t(k) + 1);
    theta[0] = Poly(Rat(N));
    for (int j = 1; j <= N; ++j) theta[size_t(j)] = Poly(thv(j));
    std::vector<Poly> elem(size_t(N) + 1);
    for (int j = 1; j <= N; ++j) {
        std::map<Var, Poly> sub;
        for (int i = 1; i <= j; ++i) sub.emplace(pv(i), Poly(thv(i)));
        elem[size_t(j)] = girard_waring_e_from_p(j).subst(sub);
    }
    for (int kk = N + 1; kk <= k; ++kk) {
        Poly acc;
        for (int j = 1; j <= N; ++j) {
            Poly term = elem[size_t(j)] * theta[size_t(kk - j)];
            if (j % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        theta[size_t(kk)] = acc;
    }
    return theta[size_t(k)];
}

Poly plethysm_eval(const Poly& f, const std::vector<int>& mu, int n, const Poly& shift) {
    if (int(mu.size()) != n) throw std::invalid_argument("plethysm_eval: weight length mismatch");
    for (int m : mu)
        if (m < 0) throw std::invalid_argument("plethysm_eval: negative weight entry");
    for (auto& t : shift.terms()) {
        if (t.first.degree() != 1 || t.first.factors[0].first.fam() != Fam::T)
            throw std::invalid_argument("plethysm_eval: shift must be linear in t");
    }
    std::map<Var, Poly> sub;
    for (auto& t : f.terms()) {
        for (auto& fac : t.first.factors) {
            if (fac.first.fam() != Fam::Psym) continue;
            int r = fac.first.i();
            if (sub.count(fac.first)) continue;
            Poly value;
            for (int i = 1; i <= n; ++i)
                if (mu[size_t(i) - 1] != 0)
                    value += Poly::monomial(Mono(tv(i), r), Rat(mu[size_t(i) - 1]));
            for (auto& st : shift.terms())
                value += Poly::monomial(Mono(st.first.factors[0].first, r), st.second);
            sub.emplace(fac.first, value);
        }
    }
    return f.subst(sub);
}

}  // namespace biggl
