#include "biggl/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace biggl {

namespace {

void check_central(const Poly& coeff) {
    if (coeff.contains_fam(Fam::X) || coeff.contains_fam(Fam::Dx))
        throw std::invalid_argument("WeylOp: coefficient must be central");
}

}  // namespace

WeylOp::WeylOp(const Poly& scalar) {
    check_central(scalar);
    if (!scalar.is_zero()) terms_[WKey{}] = scalar;
}

WeylOp WeylOp::term(const Poly& coeff, const Mono& xs, const Mono& ds) {
    check_central(coeff);
    WeylOp w;
    if (!coeff.is_zero()) w.terms_[WKey{xs, ds}] = coeff;
    return w;
}

void WeylOp::add_term(const WKey& k, const Poly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    for (auto& t : o.terms_) add_term(t.first, t.second);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    for (auto& t : o.terms_) add_term(t.first, -t.second);
    return *this;
}

WeylOp WeylOp::operator-() const {
    WeylOp r;
    for (auto& t : terms_) r.terms_.emplace(t.first, -t.second);
    return r;
}

WeylOp WeylOp::operator*(const Poly& scalar) const {
    check_central(scalar);
    WeylOp r;
    if (scalar.is_zero()) return r;
    for (auto& t : terms_) r.add_term(t.first, t.second * scalar);
    return r;
}

WeylOp WeylOp::operator*(const Rat& scalar) const {
    WeylOp r;
    if (scalar == 0) return r;
    for (auto& t : terms_) r.terms_.emplace(t.first, t.second * scalar);
    return r;
}

namespace {

// Reorder d^B x^C into normal form; emits (combinatorial factor, x-part,
// d-part) for every contraction pattern.
void reorder_dx(const Mono& B, const Mono& C,
                const std::function<void(const Rat&, const Mono&, const Mono&)>& emit) {
    // Generators appearing in both B (as d_{i,a}) and C (as x_{i,a}).
    struct Common {
        int i, a, db, cx;
    };
    std::vector<Common> common;
    for (auto& fb : B.factors) {
        for (auto& fc : C.factors) {
            if (fb.first.i() == fc.first.i() && fb.first.j() == fc.first.j()) {
                common.push_back({fb.first.i(), fb.first.j(), fb.second, fc.second});
            }
        }
    }
    std::vector<int> k(common.size(), 0);
    std::function<void(size_t, Rat)> rec = [&](size_t idx, Rat factor) {
        if (idx == common.size()) {
            Mono xs = C, ds = B;
            for (size_t s = 0; s < common.size(); ++s) {
                if (k[s] == 0) continue;
                Var xvar = xv(common[s].i, common[s].a);
                Var dvar = dv(common[s].i, common[s].a);
                for (auto& f : xs.factors)
                    if (f.first == xvar) f.second -= k[s];
                for (auto& f : ds.factors)
                    if (f.first == dvar) f.second -= k[s];
            }
            auto strip = [](Mono& m) {
                m.factors.erase(std::remove_if(m.factors.begin(), m.factors.end(),
                                               [](auto& f) { return f.second == 0; }),
                                m.factors.end());
            };
            strip(xs);
            strip(ds);
            emit(factor, xs, ds);
            return;
        }
        int maxk = std::min(common[idx].db, common[idx].cx);
        for (int kk = 0; kk <= maxk; ++kk) {
            k[idx] = kk;
            Rat f = factor * Rat(factorial(kk) * binomial(common[idx].db, kk) *
                                 binomial(common[idx].cx, kk));
            rec(idx + 1, f);
        }
        k[idx] = 0;
    };
    rec(0, Rat(1));
}

}  // namespace

WeylOp WeylOp::operator*(const WeylOp& o) const {
    WeylOp r;
    for (auto& a : terms_) {
        for (auto& b : o.terms_) {
            Poly coeff = a.second * b.second;
            reorder_dx(a.first.ds, b.first.xs, [&](const Rat& f, const Mono& xs, const Mono& ds) {
                r.add_term(WKey{a.first.xs * xs, ds * b.first.ds}, coeff * f);
            });
        }
    }
    return r;
}

Poly WeylOp::apply(const Poly& f) const {
    Poly out;
    for (auto& t : terms_) {
        for (auto& ft : f.terms()) {
            Rat factor = ft.second;
            Mono m = ft.first;
            bool vanished = false;
            // Apply the derivative part.
            for (auto& d : t.first.ds.factors) {
                Var target = xv(d.first.i(), d.first.j());
                int e = m.exponent(target);
                if (e < d.second) {
                    vanished = true;
                    break;
                }
                factor *= Rat(falling_factorial(e, d.second));
                for (auto& mf : m.factors)
                    if (mf.first == target) mf.second -= d.second;
            }
            if (vanished || factor == 0) continue;
            m.factors.erase(std::remove_if(m.factors.begin(), m.factors.end(),
                                           [](auto& mf) { return mf.second == 0; }),
                            m.factors.end());
            out += t.second * Poly::monomial(m * t.first.xs, factor);
        }
    }
    return out;
}

WeylOp WeylOp::map_coeffs(const std::function<Poly(const Poly&)>& fn) const {
    WeylOp r;
    for (auto& t : terms_) r.add_term(t.first, fn(t.second));
    return r;
}

WeylOp WeylOp::subst_coeffs(const std::map<Var, Poly>& values) const {
    return map_coeffs([&](const Poly& p) { return p.subst(values); });
}

WeylOp WeylOp::coeff_derivative(Var v) const {
    return map_coeffs([&](const Poly& p) { return p.derivative(v); });
}

std::string WeylOp::str() const {
    if (terms_.empty()) return "0";
    // Flatten coefficient terms so the output is a plain signed sum.
    struct Flat {
        Mono coeff_mono;
        Mono xs, ds;
        Rat c;
    };
    std::vector<Flat> flats;
    for (auto& t : terms_)
        for (auto& ct : t.second.terms())
            flats.push_back({ct.first, t.first.xs, t.first.ds, ct.second});
    std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
        int c = cmp_grlex(a.xs, b.xs);
        if (c != 0) return c > 0;
        c = cmp_grlex(a.ds, b.ds);
        if (c != 0) return c > 0;
        return cmp_grlex(a.coeff_mono, b.coeff_mono) > 0;
    });
    std::string s;
    bool first = true;
    for (auto& f : flats) {
        Rat c = f.c;
        if (first) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string body;
        auto append = [&body](const std::string& part) {
            if (part.empty()) return;
            if (!body.empty()) body += "*";
            body += part;
        };
        append(f.coeff_mono.str());
        append(f.xs.str());
        append(f.ds.str());
        if (body.empty()) {
            s += rat_to_string(c);
        } else if (c == 1) {
            s += body;
        } else {
            s += rat_to_string(c) + "*" + body;
        }
    }
    return s;
}

namespace {

void check_square(const NCMatrix& m) {
    for (auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant: non-square matrix");
}

}  // namespace

WeylOp rdet(const NCMatrix& m) {
    check_square(m);
    int n = int(m.size());
    WeylOp det;
    for_each_permutation(n, [&](const Tuple& sigma, int sgn) {
        WeylOp prod{Rat(sgn)};
        for (int i = 0; i < n; ++i) prod = prod * m[size_t(i)][size_t(sigma[size_t(i)]) - 1];
        det += prod;
    });
    return det;
}

WeylOp cdet(const NCMatrix& m) {
    check_square(m);
    int n = int(m.size());
    WeylOp det;
    for_each_permutation(n, [&](const Tuple& sigma, int sgn) {
        WeylOp prod{Rat(sgn)};
        for (int j = 0; j < n; ++j) prod = prod * m[size_t(sigma[size_t(j)]) - 1][size_t(j)];
        det += prod;
    });
    return det;
}

WeylOp symdet(const NCMatrix& m) {
    check_square(m);
    int n = int(m.size());
    WeylOp det;
    for_each_permutation(n, [&](const Tuple& sigma, int s1) {
        for_each_permutation(n, [&](const Tuple& tau, int s2) {
            WeylOp prod{Rat(s1 * s2)};
            for (int i = 0; i < n; ++i)
                prod = prod * m[size_t(sigma[size_t(i)]) - 1][size_t(tau[size_t(i)]) - 1];
            det += prod;
        });
    });
    return det;
}

WeylOp L_E(int i, int j, int r) {
    WeylOp w;
    for (int a = 1; a <= r; ++a) w += WeylOp::term(Poly(1), Mono(xv(i, a)), Mono(dv(j, a)));
    return w;
}

Poly det_X(const Tuple& rows, const Tuple& cols) {
    std::vector<std::vector<Poly>> m(rows.size(), std::vector<Poly>(cols.size()));
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < cols.size(); ++b) m[a][b] = Poly(xv(rows[a], cols[b]));
    return poly_det(m);
}

Poly det_D(const Tuple& rows, const Tuple& cols) {
    std::vector<std::vector<Poly>> m(rows.size(), std::vector<Poly>(cols.size()));
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < cols.size(); ++b) m[a][b] = Poly(dv(rows[a], cols[b]));
    return poly_det(m);
}

WeylOp xd_product(const Poly& xpart, const Poly& dpart, const Poly& coeff) {
    WeylOp r;
    for (auto& xt : xpart.terms())
        for (auto& dt : dpart.terms())
            r += WeylOp::term(coeff * (xt.second * dt.second), xt.first, dt.first);
    return r;
}

WeylOp symdet_LE(const Tuple& I, const Tuple& J, int r) {
    if (I.size() != J.size()) throw std::invalid_argument("symdet_LE: length mismatch");
    NCMatrix m(I.size(), std::vector<WeylOp>(J.size()));
    for (size_t a = 0; a < I.size(); ++a)
        for (size_t b = 0; b < J.size(); ++b) m[a][b] = L_E(I[a], J[b], r);
    return symdet(m);
}

WeylOp symdet_LE_closed(const Tuple& I, const Tuple& J, int r) {
    if (I.size() != J.size()) throw std::invalid_argument("symdet_LE_closed: length mismatch");
    int k = int(I.size());
    WeylOp out;
    for (int l = 1; l <= k; ++l) {
        Rat pref = Rat((k - l) % 2 == 0 ? 1 : -1) *
                   Rat(factorial(k - l) * factorial(l) * stirling2(k, l));
        if (pref == 0) continue;
        WeylOp inner;
        auto Vs = subsets(k, l);
        for (auto& R : subsets(r, l)) {
            for (auto& V : Vs) {
                Tuple IV = subtuple(I, V);
                for (auto& W : Vs) {
                    Tuple JW = subtuple(J, W);
                    int eps = epsilon(I, J, IV, JW);
                    if (eps == 0) continue;
                    inner += xd_product(det_X(IV, R), det_D(JW, R), Poly(Rat(eps)));
                }
            }
        }
        out += inner * pref;
    }
    return out;
}

WeylOp delta_columns(const Tuple& I, const Tuple& J, const Tuple& a) {
    int k = int(I.size());
    if (int(J.size()) != k || int(a.size()) != k)
        throw std::invalid_argument("delta_columns: length mismatch");
    WeylOp out;
    for_each_permutation(k, [&](const Tuple& sigma, int s1) {
        for_each_permutation(k, [&](const Tuple& tau, int s2) {
            WeylOp prod{Rat(s1 * s2)};
            for (int s = 0; s < k; ++s) {
                int col = a[size_t(s)];
                prod = prod * WeylOp::term(Poly(1), Mono(xv(I[size_t(sigma[size_t(s)]) - 1], col)),
                                           Mono(dv(J[size_t(tau[size_t(s)]) - 1], col)));
            }
            out += prod;
        });
    });
    return out;
}

WeylOp delta_columns_closed(const Tuple& I, const Tuple& J, const Tuple& a) {
    int k = int(I.size());
    std::set<int> rset(a.begin(), a.end());
    Tuple R(rset.begin(), rset.end());
    int l = int(R.size());
    Rat pref = Rat((k - l) % 2 == 0 ? 1 : -1) * Rat(factorial(k - l));
    WeylOp out;
    auto Vs = subsets(k, l);
    for (auto& V : Vs) {
        Tuple IV = subtuple(I, V);
        for (auto& W : Vs) {
            Tuple JW = subtuple(J, W);
            int eps = epsilon(I, J, IV, JW);
            if (eps == 0) continue;
            out += xd_product(det_X(IV, R), det_D(JW, R), Poly(pref * eps));
        }
    }
    return out;
}

}  // namespace biggl
