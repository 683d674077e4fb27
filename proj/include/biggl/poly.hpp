#pragma once

#include "biggl/rational.hpp"
#include "biggl/vars.hpp"

#include <map>
#include <utility>
#include <vector>

namespace biggl {

// Monomial: sorted list of (variable, positive exponent).
struct Mono {
    std::vector<std::pair<Var, int>> factors;

    Mono() = default;
    explicit Mono(Var v, int e = 1) {
        if (e != 0) factors.push_back({v, e});
    }

    bool trivial() const { return factors.empty(); }
    int degree() const {
        int d = 0;
        for (auto& f : factors) d += f.second;
        return d;
    }
    int exponent(Var v) const {
        for (auto& f : factors)
            if (f.first == v) return f.second;
        return 0;
    }

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;      // this | o
    Mono quotient_into(const Mono& o) const;  // o / this, assumes divisibility

    bool operator==(const Mono& o) const { return factors == o.factors; }
    std::string str(bool plain = false) const;
};

// Graded-lexicographic comparison: total degree first, then, on the first
// variable (in global variable order) where the exponents differ, the larger
// exponent wins. Returns <0, 0, >0 like a three-way compare, where >0 means
// a is the later (larger) monomial in the canonical descending listing.
int cmp_grlex(const Mono& a, const Mono& b);
// Pure lexicographic comparison with the same variable order.
int cmp_lex(const Mono& a, const Mono& b);

struct MonoGrlexLess {
    bool operator()(const Mono& a, const Mono& b) const { return cmp_grlex(a, b) < 0; }
};

enum class PrintStyle {
    Canonical,  // graded-lex descending, bracketed indices: y[1][2], c[3]
    Plain,      // pure-lex descending, flat generator names: P1, M2, c3
};

class Poly {
public:
    using TermMap = std::map<Mono, Rat, MonoGrlexLess>;

    Poly() = default;
    Poly(int c) { *this = Poly(Rat(c)); }
    Poly(const Rat& c) {
        if (c != 0) terms_[Mono()] = c;
    }
    explicit Poly(Var v) { terms_[Mono(v)] = 1; }
    static Poly monomial(const Mono& m, const Rat& c) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.trivial());
    }
    Rat constant_term() const {
        auto it = terms_.find(Mono());
        return it == terms_.end() ? Rat(0) : it->second;
    }
    int total_degree() const {
        int d = 0;
        for (auto& t : terms_) d = std::max(d, t.first.degree());
        return d;
    }
    int degree_in(Var v) const {
        int d = 0;
        for (auto& t : terms_) d = std::max(d, t.first.exponent(v));
        return d;
    }
    Rat coefficient(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    bool contains_fam(Fam f) const {
        for (auto& t : terms_)
            for (auto& fac : t.first.factors)
                if (fac.first.fam() == f) return true;
        return false;
    }

    void add_term(const Mono& m, const Rat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        r += o;
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        r -= o;
        return r;
    }
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }
    Poly operator*(const Rat& c) const;
    Poly operator/(const Rat& c) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int e) const;
    Poly derivative(Var v) const;
    Poly subst(Var v, const Poly& value) const;
    Poly subst(const std::map<Var, Poly>& values) const;
    Rat eval(const std::map<Var, Rat>& values) const;

    // Exact division by (a - b) for variables a, b; throws if not divisible.
    Poly div_exact_linear(Var a, Var b) const;

    // Leading term in pure-lex (descending) order; polynomial must be nonzero.
    std::pair<Mono, Rat> lex_leading() const;

    // Multiply by the unique positive rational that makes all coefficients
    // coprime integers with a positive lex-leading coefficient.
    Poly integer_cleared() const;

    // Dense coefficient list of a univariate polynomial in v (throws if any
    // other variable occurs): index = exponent.
    std::vector<Rat> univariate_coeffs(Var v) const;

    std::string str(PrintStyle style = PrintStyle::Canonical) const;

private:
    TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// Remainder of p under multivariate division by the given polynomials,
// using pure-lex leading terms.
Poly lex_reduce(Poly p, const std::vector<Poly>& basis);

// det of a square matrix of polynomials, by Leibniz expansion.
Poly poly_det(const std::vector<std::vector<Poly>>& m);

// Falling factorial u(u-1)...(u-k+1) as a polynomial in the variable v.
Poly falling_factorial_poly(Var v, int k);

}  // namespace biggl
