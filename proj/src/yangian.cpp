#include "biggl/yangian.hpp"

#include "biggl/biggen.hpp"

#include <stdexcept>

namespace biggl {

UFrac::UFrac(const WeylOp& w, const Poly& d) : num(w), den(d) {
    if (den.is_zero()) throw std::invalid_argument("UFrac: zero denominator");
    if (num.is_zero()) den = Poly(1);
}

UFrac UFrac::operator+(const UFrac& o) const {
    if (den == o.den) return UFrac(num + o.num, den);
    return UFrac(num * o.den + o.num * den, den * o.den);
}

UFrac UFrac::operator-(const UFrac& o) const {
    if (den == o.den) return UFrac(num - o.num, den);
    return UFrac(num * o.den - o.num * den, den * o.den);
}

UFrac UFrac::operator*(const UFrac& o) const { return UFrac(num * o.num, den * o.den); }

bool UFrac::operator==(const UFrac& o) const { return num * o.den == o.num * den; }

UFrac UFrac::subst(const std::map<Var, Poly>& values) const {
    return UFrac(num.subst_coeffs(values), den.subst(values));
}

TensorOp TensorOp::identity(int m, int n) {
    Tuple id;
    for (int i = 1; i <= m; ++i) id.push_back(i);
    return perm_op(id, m, n);
}

TensorOp TensorOp::perm_op(const Tuple& sigma, int m, int n) {
    if (int(sigma.size()) != m) throw std::invalid_argument("perm_op: length mismatch");
    TensorOp op(m, n);
    for (auto& I : all_tuples(n, m)) {
        MultiIndex row(I.begin(), I.end());
        MultiIndex col(static_cast<size_t>(m), 0);
        for (int k = 1; k <= m; ++k) col[size_t(k) - 1] = I[size_t(sigma[size_t(k) - 1]) - 1];
        op.add_entry(row, col, UFrac(Rat(1)));
    }
    return op;
}

TensorOp TensorOp::transposition(int a, int b, int m, int n) {
    if (a == b || a < 1 || b < 1 || a > m || b > m)
        throw std::invalid_argument("transposition: bad slots");
    Tuple sigma;
    for (int i = 1; i <= m; ++i) sigma.push_back(i);
    std::swap(sigma[size_t(a) - 1], sigma[size_t(b) - 1]);
    return perm_op(sigma, m, n);
}

TensorOp TensorOp::antisymmetrizer(int m, int n) {
    TensorOp op(m, n);
    for_each_permutation(m, [&](const Tuple& sigma, int sgn) {
        TensorOp p = perm_op(sigma, m, n);
        for (auto& e : p.entries_) op.add_entry(e.first.first, e.first.second, UFrac(Rat(sgn)));
    });
    return op;
}

TensorOp TensorOp::slot_matrix(int a, const std::vector<std::vector<UFrac>>& mat, int m, int n) {
    if (a < 1 || a > m) throw std::invalid_argument("slot_matrix: bad slot");
    TensorOp op(m, n);
    for (auto& rest : all_tuples(n, m - 1)) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const UFrac& v = mat[size_t(i) - 1][size_t(j) - 1];
                if (v.is_zero()) continue;
                MultiIndex row, col;
                size_t pos = 0;
                for (int s = 1; s <= m; ++s) {
                    if (s == a) {
                        row.push_back(i);
                        col.push_back(j);
                    } else {
                        row.push_back(rest[pos]);
                        col.push_back(rest[pos]);
                        ++pos;
                    }
                }
                op.add_entry(row, col, v);
            }
        }
    }
    return op;
}

void TensorOp::add_entry(const MultiIndex& row, const MultiIndex& col, const UFrac& v) {
    if (v.is_zero()) return;
    auto key = std::make_pair(row, col);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, v);
    } else {
        it->second = it->second + v;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

UFrac TensorOp::entry(const MultiIndex& row, const MultiIndex& col) const {
    auto it = entries_.find(std::make_pair(row, col));
    return it == entries_.end() ? UFrac() : it->second;
}

TensorOp TensorOp::operator+(const TensorOp& o) const {
    TensorOp r = *this;
    for (auto& e : o.entries_) r.add_entry(e.first.first, e.first.second, e.second);
    return r;
}

TensorOp TensorOp::operator-(const TensorOp& o) const {
    TensorOp r = *this;
    for (auto& e : o.entries_) r.add_entry(e.first.first, e.first.second, UFrac(Rat(-1)) * e.second);
    return r;
}

TensorOp TensorOp::operator*(const TensorOp& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("TensorOp: shape mismatch");
    // Index the right factor by row multi-index.
    std::map<MultiIndex, std::vector<std::pair<const MultiIndex*, const UFrac*>>> by_row;
    for (auto& e : o.entries_) by_row[e.first.first].push_back({&e.first.second, &e.second});
    TensorOp r(m_, n_);
    for (auto& e : entries_) {
        auto it = by_row.find(e.first.second);
        if (it == by_row.end()) continue;
        for (auto& [col, val] : it->second) r.add_entry(e.first.first, *col, e.second * *val);
    }
    return r;
}

TensorOp TensorOp::scale(const UFrac& c) const {
    TensorOp r(m_, n_);
    for (auto& e : entries_) r.add_entry(e.first.first, e.first.second, e.second * c);
    return r;
}

bool TensorOp::operator==(const TensorOp& o) const {
    if (m_ != o.m_ || n_ != o.n_) return false;
    for (auto& e : entries_)
        if (!(o.entry(e.first.first, e.first.second) == e.second)) return false;
    for (auto& e : o.entries_)
        if (!(entry(e.first.first, e.first.second) == e.second)) return false;
    return true;
}

UFrac TensorOp::trace() const {
    UFrac t;
    for (auto& e : entries_)
        if (e.first.first == e.first.second) t = t + e.second;
    return t;
}

TensorOp yang_R(const Poly& arg, int a, int b, int m, int n) {
    TensorOp id = TensorOp::identity(m, n);
    TensorOp p = TensorOp::transposition(a, b, m, n);
    UFrac inv(WeylOp(1), arg);
    return id - p.scale(inv);
}

namespace {

Poly chain_arg(int i, int j) { return Poly(uiv(i)) - Poly(uiv(j)); }

}  // namespace

TensorOp r_chain(int m, int n) {
    TensorOp prod = TensorOp::identity(m, n);
    for (int a = m - 1; a >= 1; --a)
        for (int b = m; b >= a + 1; --b) prod = prod * yang_R(chain_arg(a, b), a, b, m, n);
    return prod;
}

TensorOp r_chain_alt(int m, int n) {
    TensorOp prod = TensorOp::identity(m, n);
    for (int a = 1; a <= m - 1; ++a)
        for (int b = a + 1; b <= m; ++b) prod = prod * yang_R(chain_arg(a, b), a, b, m, n);
    return prod;
}

TensorOp r_chain_unit_steps(int m, int n) {
    TensorOp prod = TensorOp::identity(m, n);
    for (int a = m - 1; a >= 1; --a)
        for (int b = m; b >= a + 1; --b) prod = prod * yang_R(Poly(Rat(b - a)), a, b, m, n);
    return prod;
}

TensorOp ev_T(int slot, const Rat& shift, int m, int n, int r) {
    std::vector<std::vector<UFrac>> mat(static_cast<size_t>(n), std::vector<UFrac>(static_cast<size_t>(n)));
    Poly den = Poly(uv()) + Poly(shift);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            WeylOp num = L_E(i, j, r);
            if (i == j) num += WeylOp(den);
            mat[size_t(i) - 1][size_t(j) - 1] = UFrac(num, den);
        }
    }
    return TensorOp::slot_matrix(slot, mat, m, n);
}

TensorOp slot_scalar_matrix(int slot, const std::vector<std::vector<Poly>>& mat, int m, int n) {
    std::vector<std::vector<UFrac>> lifted(static_cast<size_t>(n), std::vector<UFrac>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lifted[size_t(i)][size_t(j)] = UFrac(WeylOp(mat[size_t(i)][size_t(j)]));
    return TensorOp::slot_matrix(slot, lifted, m, n);
}

std::vector<std::vector<Poly>> cartan_matrix(int n) {
    std::vector<std::vector<Poly>> c(size_t(n), std::vector<Poly>(size_t(n), Poly(0)));
    for (int i = 1; i <= n; ++i) c[size_t(i) - 1][size_t(i) - 1] = Poly(tv(i));
    return c;
}

namespace {

UFrac bethe_trace(int n, int r, int k, const std::vector<std::vector<Poly>>& C, int slots,
                  bool reversed) {
    TensorOp op = TensorOp::antisymmetrizer(slots, n);
    if (!reversed) {
        for (int j = 1; j <= k; ++j) op = op * ev_T(j, Rat(-(j - 1)), slots, n, r);
    } else {
        for (int j = k; j >= 1; --j) op = op * ev_T(j, Rat(-(j - 1)), slots, n, r);
    }
    for (int j = k + 1; j <= slots; ++j) op = op * slot_scalar_matrix(j, C, slots, n);
    UFrac t = op.trace();
    return UFrac(t.num, t.den * Rat(factorial(slots)));
}

}  // namespace

UFrac sigma_k(int n, int r, int k, const std::vector<std::vector<Poly>>& C) {
    return bethe_trace(n, r, k, C, n, false);
}

UFrac sigma_k_reversed(int n, int r, int k, const std::vector<std::vector<Poly>>& C) {
    return bethe_trace(n, r, k, C, n, true);
}

UFrac tau_k(int n, int r, int k, const std::vector<std::vector<Poly>>& C) {
    return bethe_trace(n, r, k, C, k, false);
}

UFrac tau_k_reversed(int n, int r, int k, const std::vector<std::vector<Poly>>& C) {
    return bethe_trace(n, r, k, C, k, true);
}

std::map<int, WeylOp> split_by_power(const WeylOp& w, Var v) {
    std::map<int, WeylOp> out;
    for (auto& t : w.terms()) {
        for (auto& ct : t.second.terms()) {
            int e = ct.first.exponent(v);
            Mono rest;
            for (auto& f : ct.first.factors)
                if (!(f.first == v)) rest.factors.push_back(f);
            out[e] += WeylOp::term(Poly::monomial(rest, ct.second), t.first.xs, t.first.ds);
        }
    }
    return out;
}

Report verify_yang_baxter(int n) {
    Report rep;
    rep.command = "yang-baxter n=" + std::to_string(n);
    const int m = 3;
    Poly u((uv())), v((vv())), w((wv()));
    TensorOp lhs = yang_R(u - v, 1, 2, m, n) * yang_R(u - w, 1, 3, m, n) *
                   yang_R(v - w, 2, 3, m, n);
    TensorOp rhs = yang_R(v - w, 2, 3, m, n) * yang_R(u - w, 1, 3, m, n) *
                   yang_R(u - v, 1, 2, m, n);
    if (lhs == rhs)
        rep.note_pass();
    else
        rep.add_failure("R12 R13 R23 = R23 R13 R12", "<tensor>", "<tensor>", "entries differ");
    return rep;
}

Report verify_rchain(int m, int n) {
    Report rep;
    rep.command = "rchain m=" + std::to_string(m) + " n=" + std::to_string(n);
    if (r_chain(m, n) == r_chain_alt(m, n))
        rep.note_pass();
    else
        rep.add_failure("factorization order", "<tensor>", "<tensor>", "entries differ");
    if (r_chain_unit_steps(m, n) == TensorOp::antisymmetrizer(m, n))
        rep.note_pass();
    else
        rep.add_failure("unit-step specialization", "<tensor>", "<antisymmetrizer>",
                        "entries differ");
    return rep;
}

Report verify_bethe_bridge(int n, int r, int p) {
    Report rep;
    rep.command = "bethe n=" + std::to_string(n) + " r=" + std::to_string(r) +
                  " p=" + std::to_string(p);
    if (p < 0 || p > n) throw std::invalid_argument("verify_bethe_bridge: need 0 <= p <= n");
    int k = n - p;
    UFrac sigma = sigma_k(n, r, k, cartan_matrix(n));
    // Substitute u -> (k-1) - u and clear the binomial prefactor.
    std::map<Var, Poly> flip{{uv(), Poly(Rat(k - 1)) - Poly(uv())}};
    UFrac lhs = sigma.subst(flip);
    Rat pref = Rat(factorial(n)) / Rat(factorial(k));
    if (k % 2 == 1) pref = -pref;
    lhs = lhs * UFrac(WeylOp(falling_factorial_poly(uv(), k) * pref));
    // The lhs expansion produces every ordering of the p padding slots, so
    // the generator side carries a factor p!.
    WeylOp rhs;
    for (int l = 0; l <= k; ++l) {
        Rat sign = (k - l) % 2 == 0 ? 1 : -1;
        rhs += f_pq_cartan(n, r, p, l) *
               (falling_factorial_poly(uv(), k - l) * (sign * Rat(factorial(p))));
    }
    if (lhs == UFrac(rhs))
        rep.note_pass();
    else
        rep.add_failure("bridge identity", (lhs.num - rhs * lhs.den).str(), "0", "");
    return rep;
}

Report verify_bethe_commutativity(int n, int r) {
    Report rep;
    rep.command = "bethe-commute n=" + std::to_string(n) + " r=" + std::to_string(r);
    // Coefficients of the cleared numerators pairwise commute.
    std::vector<WeylOp> coeffs;
    for (int k = 1; k <= n; ++k) {
        UFrac s = sigma_k(n, r, k, cartan_matrix(n));
        for (auto& [e, op] : split_by_power(s.num, uv())) coeffs.push_back(op);
    }
    for (size_t a = 0; a < coeffs.size(); ++a) {
        for (size_t b = a + 1; b < coeffs.size(); ++b) {
            WeylOp c = commutator(coeffs[a], coeffs[b]);
            if (c.is_zero())
                rep.note_pass();
            else
                rep.add_failure("coefficient pair " + std::to_string(a) + "," + std::to_string(b),
                                c.str(), "0", "");
        }
    }
    return rep;
}

}  // namespace biggl
