#include "biggl/biggen.hpp"

#include <stdexcept>

namespace biggl {

Poly c_k(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("c_k: need 0 <= k <= n");
    if (k == 0) return Poly(1);
    Poly out;
    for (auto& I : subsets(n, k)) {
        std::vector<std::vector<Poly>> m(I.size(), std::vector<Poly>(I.size()));
        for (size_t a = 0; a < I.size(); ++a)
            for (size_t b = 0; b < I.size(); ++b) m[a][b] = Poly(yv(I[a], I[b]));
        out += poly_det(m);
    }
    return out;
}

WeylOp kirillov_wei(const WeylOp& f, int n, int r) {
    WeylOp out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            WeylOp df = f.coeff_derivative(yv(j, i));
            if (df.is_zero()) continue;
            out += df * L_E(i, j, r);
        }
    }
    return out;
}

WeylOp m_pq_direct(int n, int r, int p, int q) {
    if (p < 0 || q < 0 || p + q > n) throw std::invalid_argument("m_pq: need p,q >= 0, p+q <= n");
    WeylOp f{c_k(n, p + q)};
    for (int step = 0; step < q; ++step) f = kirillov_wei(f, n, r);
    return f;
}

namespace {

// Runs fn over all (I1, J1, I2, J2) with I1 ⊔ I2 = J1 ⊔ J2 a common
// (p+q)-subset, passing the block sign of the arrangement.
void for_each_split(int n, int p, int q,
                    const std::function<void(const Tuple&, const Tuple&, const Tuple&,
                                             const Tuple&, int)>& fn) {
    for (auto& S : subsets(n, p + q)) {
        auto positions = subsets(p + q, p);
        for (auto& PI : positions) {
            Tuple I1 = subtuple(S, PI);
            Tuple I2;
            {
                std::vector<bool> inP(size_t(p + q) + 1, false);
                for (int pos : PI) inP[size_t(pos)] = true;
                for (int pos = 1; pos <= p + q; ++pos)
                    if (!inP[size_t(pos)]) I2.push_back(S[size_t(pos) - 1]);
            }
            for (auto& PJ : positions) {
                Tuple J1 = subtuple(S, PJ);
                Tuple J2;
                std::vector<bool> inP(size_t(p + q) + 1, false);
                for (int pos : PJ) inP[size_t(pos)] = true;
                for (int pos = 1; pos <= p + q; ++pos)
                    if (!inP[size_t(pos)]) J2.push_back(S[size_t(pos) - 1]);
                int sgn = sgn_block({I1, I2}, {J1, J2});
                fn(I1, J1, I2, J2, sgn);
            }
        }
    }
}

Poly det_Y(const Tuple& rows, const Tuple& cols) {
    std::vector<std::vector<Poly>> m(rows.size(), std::vector<Poly>(cols.size()));
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < cols.size(); ++b) m[a][b] = Poly(yv(rows[a], cols[b]));
    return poly_det(m);
}

}  // namespace

WeylOp m_pq_closed(int n, int r, int p, int q) {
    if (p < 0 || q < 0 || p + q > n) throw std::invalid_argument("m_pq: need p,q >= 0, p+q <= n");
    WeylOp out;
    for_each_split(n, p, q, [&](const Tuple& I1, const Tuple& J1, const Tuple& I2,
                                const Tuple& J2, int sgn) {
        Poly ydet = det_Y(I1, J1) * Rat(sgn);
        WeylOp inner;
        if (q == 0) {
            inner = WeylOp(1);
        } else {
            inner = symdet_LE_closed(J2, I2, r);
        }
        out += inner * ydet;
    });
    return out;
}

WeylOp f_pq(int n, int r, int p, int q) {
    if (p < 0 || q < 0 || p + q > n) throw std::invalid_argument("f_pq: need p,q >= 0, p+q <= n");
    WeylOp out;
    if (q > r) return out;
    auto Rs = subsets(r, q);
    for_each_split(n, p, q, [&](const Tuple& I1, const Tuple& J1, const Tuple& I2,
                                const Tuple& J2, int sgn) {
        Poly ydet = det_Y(I1, J1) * Rat(sgn);
        WeylOp inner;
        for (auto& R : Rs) inner += xd_product(det_X(J2, R), det_D(I2, R));
        out += inner * ydet;
    });
    return out;
}

WeylOp m_from_f(int n, int r, int p, int q) {
    WeylOp out;
    for (int l = 0; l <= q; ++l) {
        Rat coeff = Rat((q - l) % 2 == 0 ? 1 : -1) *
                    Rat(factorial(q - l) * factorial(l) * stirling2(q, l) *
                        binomial(n - p - l, q - l));
        if (coeff == 0) continue;
        out += f_pq(n, r, p, l) * coeff;
    }
    return out;
}

WeylOp restrict_cartan(const WeylOp& f, int n) {
    std::map<Var, Poly> sub;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) sub.emplace(yv(i, j), i == j ? Poly(tv(i)) : Poly(0));
    return f.subst_coeffs(sub);
}

WeylOp f_pq_cartan(int n, int r, int p, int q) {
    WeylOp out;
    if (q > r) return out;
    auto Rs = subsets(r, q);
    for (auto& I : subsets(n, p)) {
        std::vector<bool> inI(size_t(n) + 1, false);
        for (int i : I) inI[size_t(i)] = true;
        Poly prod(1);
        for (int i : I) prod = prod * Poly(tv(i));
        for (auto& J : subsets(n, q)) {
            bool disjoint = true;
            for (int j : J)
                if (inI[size_t(j)]) disjoint = false;
            if (!disjoint) continue;
            WeylOp inner;
            for (auto& R : Rs) inner += xd_product(det_X(J, R), det_D(J, R));
            out += inner * prod;
        }
    }
    return out;
}

}  // namespace biggl
