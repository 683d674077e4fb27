#include "biggl/capelli.hpp"

#include <stdexcept>

namespace biggl {

namespace {

NCMatrix shifted_LE_matrix(const Tuple& I, const Tuple& J, const std::vector<Poly>& row_shifts,
                           const std::vector<Poly>& col_shifts, int r) {
    size_t k = I.size();
    if (J.size() != k || (row_shifts.size() != k && col_shifts.size() != k))
        throw std::invalid_argument("capelli matrix: size mismatch");
    NCMatrix m(k, std::vector<WeylOp>(k));
    for (size_t a = 0; a < k; ++a) {
        for (size_t b = 0; b < k; ++b) {
            m[a][b] = L_E(I[a], J[b], r);
            if (I[a] == J[b]) {
                const Poly& s = row_shifts.size() == k ? row_shifts[a] : col_shifts[b];
                m[a][b] += WeylOp(s);
            }
        }
    }
    return m;
}

}  // namespace

WeylOp capelli_rdet(const Tuple& I, const Tuple& J, const std::vector<Poly>& diag_shifts, int r) {
    return rdet(shifted_LE_matrix(I, J, diag_shifts, {}, r));
}

WeylOp capelli_cdet(const Tuple& I, const Tuple& J, const std::vector<Poly>& diag_shifts, int r) {
    return cdet(shifted_LE_matrix(I, J, {}, diag_shifts, r));
}

std::vector<Poly> capelli_shifts(int k) {
    std::vector<Poly> s;
    for (int a = 0; a < k; ++a) s.push_back(Poly(Rat(a)));
    return s;
}

std::vector<Poly> capelli_shifts_z(int k) {
    std::vector<Poly> s;
    for (int a = 0; a < k; ++a) s.push_back(Poly(Rat(a)) - Poly(zv()));
    return s;
}

WeylOp capelli_generator(int n, int k, int r) {
    WeylOp out;
    for (auto& I : subsets(n, k)) out += capelli_rdet(I, I, capelli_shifts(k), r);
    return out;
}

WeylOp capelli_z(int n, int k, int r) {
    WeylOp out;
    for (auto& I : subsets(n, k)) out += capelli_rdet(I, I, capelli_shifts_z(k), r);
    return out;
}

namespace {

WeylOp minor_pair_sum(const Tuple& I, const Tuple& J, int r, int k) {
    WeylOp out;
    for (auto& K : subsets(r, k)) out += xd_product(det_X(I, K), det_D(J, K));
    return out;
}

std::string tuple_str(const Tuple& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

void compare(Report& rep, const std::string& name, const WeylOp& lhs, const WeylOp& rhs) {
    if (lhs == rhs) {
        rep.note_pass();
    } else {
        rep.add_failure(name, lhs.str(), rhs.str(), (lhs - rhs).str());
    }
}

}  // namespace

Report verify_cauchy_binet(int n, int r, int k) {
    Report rep;
    rep.command = "cauchy-binet n=" + std::to_string(n) + " r=" + std::to_string(r) +
                  " k=" + std::to_string(k);
    if (k > n) throw std::invalid_argument("verify_cauchy_binet: need k <= n");
    auto shifts = capelli_shifts(k);
    for (auto& I : distinct_tuples(n, k)) {
        for (auto& J : distinct_tuples(n, k)) {
            WeylOp lhs = capelli_rdet(I, J, shifts, r);
            WeylOp rhs = minor_pair_sum(I, J, r, k);
            compare(rep, "L(Pi_" + tuple_str(I) + tuple_str(J) + ")", lhs, rhs);
        }
    }
    // Skew symmetry in I for sorted J, via adjacent transpositions.
    for (auto& I : distinct_tuples(n, k)) {
        for (auto& J : subsets(n, k)) {
            for (size_t s = 0; s + 1 < I.size(); ++s) {
                Tuple I2 = I;
                std::swap(I2[s], I2[s + 1]);
                compare(rep, "skew " + tuple_str(I) + tuple_str(J),
                        capelli_rdet(I, J, shifts, r), -capelli_rdet(I2, J, shifts, r));
            }
        }
    }
    // Vanishing on repeated indices (both sides zero).
    if (k >= 2) {
        for (auto& I : all_tuples(n, k)) {
            bool repeats = false;
            for (size_t a = 0; a < I.size() && !repeats; ++a)
                for (size_t b = a + 1; b < I.size(); ++b)
                    if (I[a] == I[b]) repeats = true;
            if (!repeats) continue;
            Tuple J = I;
            compare(rep, "repeated " + tuple_str(I), capelli_rdet(I, J, shifts, r),
                    minor_pair_sum(I, J, r, k));
            if (!capelli_rdet(I, J, shifts, r).is_zero())
                rep.add_failure("repeated-nonzero " + tuple_str(I),
                                capelli_rdet(I, J, shifts, r).str(), "0", "");
        }
    }
    return rep;
}

Report verify_capelli_z_expansion(int n, int k, int r) {
    Report rep;
    rep.command = "charpoly n=" + std::to_string(n) + " k=" + std::to_string(k) +
                  " r=" + std::to_string(r);
    WeylOp lhs = capelli_z(n, k, r);
    WeylOp rhs;
    for (int m = 0; m <= k; ++m) {
        Rat sign = m % 2 == 0 ? 1 : -1;
        Poly coeff = falling_factorial_poly(zv(), m) * (sign * Rat(binomial(n - k + m, m)));
        rhs += capelli_generator(n, k - m, r) * coeff;
    }
    compare(rep, "C_k(z) expansion", lhs, rhs);
    return rep;
}

Report verify_rdet_cdet_shift(int n, int r, int k) {
    Report rep;
    rep.command = "rdet-cdet n=" + std::to_string(n) + " r=" + std::to_string(r) +
                  " k=" + std::to_string(k);
    std::vector<Poly> row_shifts, col_shifts;
    for (int a = 1; a <= k; ++a) row_shifts.push_back(Poly(zv()) + Poly(Rat(a - 1)));
    for (int b = 1; b <= k; ++b) col_shifts.push_back(Poly(zv()) + Poly(Rat(k - b)));
    for (auto& I : all_tuples(n, k)) {
        for (auto& J : all_tuples(n, k)) {
            compare(rep, "pair " + tuple_str(I) + tuple_str(J),
                    capelli_rdet(I, J, row_shifts, r), capelli_cdet(I, J, col_shifts, r));
        }
    }
    return rep;
}

Report centrality_check(int n, int k) {
    Report rep;
    rep.command = "centrality n=" + std::to_string(n) + " k=" + std::to_string(k);
    int r = n;  // faithful model
    WeylOp ck = capelli_generator(n, k, r);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            WeylOp c = commutator(ck, L_E(i, j, r));
            if (c.is_zero()) {
                rep.note_pass();
            } else {
                rep.add_failure("[C_k, E_" + std::to_string(i) + std::to_string(j) + "]",
                                c.str(), "0", c.str());
            }
        }
    }
    return rep;
}

}  // namespace biggl
