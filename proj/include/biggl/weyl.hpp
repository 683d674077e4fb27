#pragma once

#include "biggl/combinat.hpp"
#include "biggl/poly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace biggl {

// One normal-form generator block: x-exponents and derivative exponents.
// Monomials use the X / Dx variable families with (row, column) indices.
struct WKey {
    Mono xs;
    Mono ds;

    bool operator==(const WKey& o) const { return xs == o.xs && ds == o.ds; }
};

struct WKeyLess {
    bool operator()(const WKey& a, const WKey& b) const {
        int c = cmp_grlex(a.xs, b.xs);
        if (c != 0) return c < 0;
        return cmp_grlex(a.ds, b.ds) < 0;
    }
};

// Element of the Weyl algebra in normal form: a finite sum of terms
// coeff * x^A * d^B where the coefficient polynomial is central (it may
// involve y, t, u, z, c variables but never x or d).
class WeylOp {
public:
    using TermMap = std::map<WKey, Poly, WKeyLess>;

    WeylOp() = default;
    WeylOp(int c) : WeylOp(Poly(c)) {}
    WeylOp(const Rat& c) : WeylOp(Poly(c)) {}
    WeylOp(const Poly& scalar);

    static WeylOp term(const Poly& coeff, const Mono& xs, const Mono& ds);
    // Single generator x_{i,a} resp. d_{i,a}.
    static WeylOp x_gen(int i, int a) { return term(Poly(1), Mono(xv(i, a)), Mono()); }
    static WeylOp d_gen(int i, int a) { return term(Poly(1), Mono(), Mono(dv(i, a))); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    WeylOp operator+(const WeylOp& o) const {
        WeylOp r = *this;
        r += o;
        return r;
    }
    WeylOp operator-(const WeylOp& o) const {
        WeylOp r = *this;
        r -= o;
        return r;
    }
    WeylOp operator-() const;
    // Normal-ordered product.
    WeylOp operator*(const WeylOp& o) const;
    WeylOp operator*(const Poly& scalar) const;
    WeylOp operator*(const Rat& scalar) const;
    bool operator==(const WeylOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const WeylOp& o) const { return !(*this == o); }

    // Apply every term as a differential operator to a polynomial in the
    // x variables (other variables in f are treated as constants).
    Poly apply(const Poly& f) const;

    WeylOp map_coeffs(const std::function<Poly(const Poly&)>& fn) const;
    WeylOp subst_coeffs(const std::map<Var, Poly>& values) const;
    // Derivative of the central coefficients with respect to v.
    WeylOp coeff_derivative(Var v) const;

    std::string str() const;

private:
    void add_term(const WKey& k, const Poly& c);
    TermMap terms_;
};

inline WeylOp operator*(const Poly& s, const WeylOp& w) { return w * s; }
inline WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

using NCMatrix = std::vector<std::vector<WeylOp>>;

WeylOp rdet(const NCMatrix& m);
WeylOp cdet(const NCMatrix& m);
WeylOp symdet(const NCMatrix& m);

// Infinitesimal action of the (i,j) matrix unit on polynomials in an
// n x r matrix of x variables: sum_a x_{i,a} d_{j,a}.
WeylOp L_E(int i, int j, int r);

// Commutative minors: rows from the index tuple, columns from R.
Poly det_X(const Tuple& rows, const Tuple& cols);
Poly det_D(const Tuple& rows, const Tuple& cols);

// Product (x-polynomial) * (d-polynomial) * central coefficient, which is
// already in normal form.
WeylOp xd_product(const Poly& xpart, const Poly& dpart, const Poly& coeff = Poly(1));

// Symmetrized determinant of the k x k matrix [L(E_{I_a J_b})], expanded
// term by term over both permutation indices.
WeylOp symdet_LE(const Tuple& I, const Tuple& J, int r);
// The same element via its closed normal form.
WeylOp symdet_LE_closed(const Tuple& I, const Tuple& J, int r);

// Single-column-multiset specialization with prescribed columns a_1..a_k,
// both as a direct expansion and via the closed formula.
WeylOp delta_columns(const Tuple& I, const Tuple& J, const Tuple& a);
WeylOp delta_columns_closed(const Tuple& I, const Tuple& J, const Tuple& a);

}  // namespace biggl
