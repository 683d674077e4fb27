#include "biggl/poly.hpp"

#include "biggl/combinat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace biggl {

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    r.factors.reserve(factors.size() + o.factors.size());
    auto a = factors.begin(), ae = factors.end();
    auto b = o.factors.begin(), be = o.factors.end();
    while (a != ae && b != be) {
        if (a->first < b->first)
            r.factors.push_back(*a++);
        else if (b->first < a->first)
            r.factors.push_back(*b++);
        else {
            r.factors.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    r.factors.insert(r.factors.end(), a, ae);
    r.factors.insert(r.factors.end(), b, be);
    return r;
}

bool Mono::divides(const Mono& o) const {
    auto b = o.factors.begin(), be = o.factors.end();
    for (auto& f : factors) {
        while (b != be && b->first < f.first) ++b;
        if (b == be || !(b->first == f.first) || b->second < f.second) return false;
    }
    return true;
}

Mono Mono::quotient_into(const Mono& o) const {
    Mono r;
    auto b = o.factors.begin(), be = o.factors.end();
    for (auto& f : factors) {
        while (b != be && b->first < f.first) r.factors.push_back(*b++);
        if (b == be || !(b->first == f.first) || b->second < f.second)
            throw std::invalid_argument("Mono::quotient_into: not divisible");
        if (b->second > f.second) r.factors.push_back({b->first, b->second - f.second});
        ++b;
    }
    r.factors.insert(r.factors.end(), b, be);
    return r;
}

std::string Mono::str(bool plain) const {
    std::vector<std::pair<Var, int>> order = factors;
    if (plain) {
        // Scalar c factors print before the generator symbols.
        std::stable_sort(order.begin(), order.end(), [](auto& a, auto& b) {
            bool ca = a.first.fam() == Fam::C, cb = b.first.fam() == Fam::C;
            if (ca != cb) return ca;
            return a.first < b.first;
        });
    }
    std::string s;
    for (auto& f : order) {
        if (!s.empty()) s += "*";
        Var v = f.first;
        if (plain && v.fam() == Fam::C)
            s += "c" + std::to_string(v.i());
        else
            s += v.name();
        if (f.second != 1) s += "^" + std::to_string(f.second);
    }
    return s;
}

int cmp_lex(const Mono& a, const Mono& b) {
    auto ia = a.factors.begin(), ea = a.factors.end();
    auto ib = b.factors.begin(), eb = b.factors.end();
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first) return 1;   // a has the more significant variable
        if (ib->first < ia->first) return -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

int cmp_grlex(const Mono& a, const Mono& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    return cmp_lex(a, b);
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& t : o.terms_) add_term(t.first, t.second);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& t : o.terms_) add_term(t.first, -t.second);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& t : terms_) r.terms_.emplace(t.first, -t.second);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& a : terms_)
        for (auto& b : o.terms_) r.add_term(a.first * b.first, a.second * b.second);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& t : terms_) r.terms_.emplace(t.first, t.second * c);
    return r;
}

Poly Poly::operator/(const Rat& c) const {
    if (c == 0) throw std::invalid_argument("Poly: division by zero");
    return *this * (Rat(1) / c);
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::derivative(Var v) const {
    Poly r;
    for (auto& t : terms_) {
        int e = t.first.exponent(v);
        if (e == 0) continue;
        Mono m;
        for (auto& f : t.first.factors) {
            if (f.first == v) {
                if (e > 1) m.factors.push_back({f.first, e - 1});
            } else {
                m.factors.push_back(f);
            }
        }
        r.add_term(m, t.second * e);
    }
    return r;
}

Poly Poly::subst(Var v, const Poly& value) const {
    std::map<Var, Poly> m;
    m.emplace(v, value);
    return subst(m);
}

Poly Poly::subst(const std::map<Var, Poly>& values) const {
    Poly r;
    for (auto& t : terms_) {
        Poly term(t.second);
        Mono rest;
        for (auto& f : t.first.factors) {
            auto it = values.find(f.first);
            if (it == values.end())
                rest.factors.push_back(f);
            else
                term = term * it->second.pow(f.second);
        }
        r += term * Poly::monomial(rest, 1);
    }
    return r;
}

Rat Poly::eval(const std::map<Var, Rat>& values) const {
    Rat r = 0;
    for (auto& t : terms_) {
        Rat term = t.second;
        for (auto& f : t.first.factors) {
            auto it = values.find(f.first);
            if (it == values.end()) throw std::invalid_argument("Poly::eval: unbound variable " + f.first.name());
            Rat p = 1;
            for (int i = 0; i < f.second; ++i) p *= it->second;
            term *= p;
        }
        r += term;
    }
    return r;
}

Poly Poly::div_exact_linear(Var a, Var b) const {
    // Synthetic division by (a - b), treating the polynomial as univariate
    // in a with coefficients in the remaining variables.
    int d = degree_in(a);
    std::vector<Poly> coeff(d + 1);
    for (auto& t : terms_) {
        int e = t.first.exponent(a);
        Mono m;
        for (auto& f : t.first.factors)
            if (!(f.first == a)) m.factors.push_back(f);
        coeff[e].add_term(m, t.second);
    }
    Poly bp((Var(b)));
    std::vector<Poly> q(std::max(d, 1));
    Poly carry;
    for (int k = d; k >= 1; --k) {
        Poly qk = coeff[k] + carry;
        q[k - 1] = qk;
        carry = bp * qk;
    }
    Poly rem = coeff[0] + carry;
    if (!rem.is_zero()) throw std::runtime_error("Poly::div_exact_linear: nonzero remainder");
    Poly result;
    Poly ap((Var(a)));
    Poly apow(1);
    for (int k = 0; k < int(q.size()); ++k) {
        result += q[k] * apow;
        apow = apow * ap;
    }
    return result;
}

std::pair<Mono, Rat> Poly::lex_leading() const {
    if (terms_.empty()) throw std::invalid_argument("Poly::lex_leading: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (cmp_lex(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

Poly Poly::integer_cleared() const {
    if (terms_.empty()) return *this;
    Int num_gcd = 0, den_lcm = 1;
    for (auto& t : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(t.second));
        Int d = denominator(t.second);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    Rat scale(den_lcm, num_gcd);
    if (lex_leading().second * scale < 0) scale = -scale;
    return *this * scale;
}

std::vector<Rat> Poly::univariate_coeffs(Var v) const {
    std::vector<Rat> c(size_t(degree_in(v)) + 1, Rat(0));
    for (auto& t : terms_) {
        if (t.first.factors.size() > 1 ||
            (t.first.factors.size() == 1 && !(t.first.factors[0].first == v)))
            throw std::invalid_argument("Poly::univariate_coeffs: extra variables present");
        c[t.first.exponent(v)] = t.second;
    }
    return c;
}

std::string Poly::str(PrintStyle style) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Mono, Rat>*> order;
    order.reserve(terms_.size());
    for (auto& t : terms_) order.push_back(&t);
    if (style == PrintStyle::Canonical) {
        std::sort(order.begin(), order.end(),
                  [](auto* a, auto* b) { return cmp_grlex(a->first, b->first) > 0; });
    } else {
        std::sort(order.begin(), order.end(),
                  [](auto* a, auto* b) { return cmp_lex(a->first, b->first) > 0; });
    }
    std::string sep_plus = style == PrintStyle::Canonical ? " + " : "+";
    std::string sep_minus = style == PrintStyle::Canonical ? " - " : "-";
    std::string s;
    bool first = true;
    for (auto* t : order) {
        Rat c = t->second;
        if (first) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
            first = false;
        } else {
            if (c < 0) {
                s += sep_minus;
                c = -c;
            } else {
                s += sep_plus;
            }
        }
        std::string mono = t->first.str(style == PrintStyle::Plain);
        if (mono.empty()) {
            s += rat_to_string(c);
        } else if (c == 1) {
            s += mono;
        } else {
            s += rat_to_string(c) + "*" + mono;
        }
    }
    return s;
}

Poly lex_reduce(Poly p, const std::vector<Poly>& basis) {
    std::vector<std::pair<Mono, Rat>> leads;
    leads.reserve(basis.size());
    for (auto& b : basis) leads.push_back(b.lex_leading());
    Poly rem;
    while (!p.is_zero()) {
        auto [lm, lc] = p.lex_leading();
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (leads[i].first.divides(lm)) {
                Mono q = leads[i].first.quotient_into(lm);
                p -= basis[i] * Poly::monomial(q, lc / leads[i].second);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            Poly lt = Poly::monomial(lm, lc);
            p -= lt;
        }
    }
    return rem;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_det: non-square matrix");
    if (n == 0) return Poly(1);
    Poly det;
    for_each_permutation(int(n), [&](const std::vector<int>& sigma, int sgn) {
        Poly prod(sgn);
        for (size_t i = 0; i < n; ++i) prod = prod * m[i][size_t(sigma[i]) - 1];
        det += prod;
    });
    return det;
}

Poly falling_factorial_poly(Var v, int k) {
    Poly r(1);
    for (int i = 0; i < k; ++i) r = r * (Poly(v) - Poly(Rat(i)));
    return r;
}

}  // namespace biggl
