#pragma once

#include "biggl/report.hpp"
#include "biggl/weyl.hpp"

#include <map>
#include <vector>

namespace biggl {

// Scalar of a tensor operator: a Weyl-algebra element divided by a central
// polynomial. Denominators are only multiplied, never cancelled; equality
// is decided by cross multiplication.
struct UFrac {
    WeylOp num;
    Poly den = Poly(1);

    UFrac() = default;
    UFrac(const Rat& c) : num(c) {}
    UFrac(const WeylOp& w) : num(w) {}
    UFrac(const WeylOp& w, const Poly& d);

    bool is_zero() const { return num.is_zero(); }
    UFrac operator+(const UFrac& o) const;
    UFrac operator-(const UFrac& o) const;
    UFrac operator*(const UFrac& o) const;
    bool operator==(const UFrac& o) const;
    bool operator!=(const UFrac& o) const { return !(*this == o); }

    UFrac subst(const std::map<Var, Poly>& values) const;
};

using MultiIndex = std::vector<int>;

// Sparse operator on the m-fold tensor power of an n-dimensional space,
// with UFrac matrix entries.
class TensorOp {
public:
    TensorOp(int m, int n) : m_(m), n_(n) {}

    static TensorOp identity(int m, int n);
    // Operator permuting the tensor slots by sigma (images, 1-based).
    static TensorOp perm_op(const Tuple& sigma, int m, int n);
    static TensorOp transposition(int a, int b, int m, int n);
    static TensorOp antisymmetrizer(int m, int n);
    // Places an n x n matrix of scalars into tensor slot a.
    static TensorOp slot_matrix(int a, const std::vector<std::vector<UFrac>>& mat, int m, int n);

    int slots() const { return m_; }
    int dim() const { return n_; }
    const std::map<std::pair<MultiIndex, MultiIndex>, UFrac>& entries() const { return entries_; }

    void add_entry(const MultiIndex& row, const MultiIndex& col, const UFrac& v);
    UFrac entry(const MultiIndex& row, const MultiIndex& col) const;

    TensorOp operator+(const TensorOp& o) const;
    TensorOp operator-(const TensorOp& o) const;
    TensorOp operator*(const TensorOp& o) const;  // composition
    TensorOp scale(const UFrac& c) const;
    bool operator==(const TensorOp& o) const;

    UFrac trace() const;

private:
    int m_, n_;
    std::map<std::pair<MultiIndex, MultiIndex>, UFrac> entries_;
};

// 1 - arg^{-1} P_ab acting in slots a, b.
TensorOp yang_R(const Poly& arg, int a, int b, int m, int n);

// Ordered product of yang_R factors over all slot pairs, in the standard
// descending grouping; arguments are u[i] - u[j].
TensorOp r_chain(int m, int n);
// The same product in the alternative ascending grouping.
TensorOp r_chain_alt(int m, int n);
// The chain evaluated at unit steps u_i - u_{i+1} = 1.
TensorOp r_chain_unit_steps(int m, int n);

// Single-slot factor with entries delta_ij + (u + shift)^{-1} L(E_ij).
TensorOp ev_T(int slot, const Rat& shift, int m, int n, int r);
// Single-slot factor with central polynomial matrix entries.
TensorOp slot_scalar_matrix(int slot, const std::vector<std::vector<Poly>>& mat, int m, int n);

// Bethe elements evaluated on the polynomial model: antisymmetrized traces
// of k T-factors padded with matrix factors C.
UFrac sigma_k(int n, int r, int k, const std::vector<std::vector<Poly>>& C);
UFrac sigma_k_reversed(int n, int r, int k, const std::vector<std::vector<Poly>>& C);
UFrac tau_k(int n, int r, int k, const std::vector<std::vector<Poly>>& C);
UFrac tau_k_reversed(int n, int r, int k, const std::vector<std::vector<Poly>>& C);

// Diagonal matrix diag(t_1, ..., t_n) of Cartan coordinates.
std::vector<std::vector<Poly>> cartan_matrix(int n);

// Splits a Weyl operator into coefficients of powers of v.
std::map<int, WeylOp> split_by_power(const WeylOp& w, Var v);

Report verify_yang_baxter(int n);
Report verify_rchain(int m, int n);
Report verify_bethe_bridge(int n, int r, int p);
Report verify_bethe_commutativity(int n, int r);

}  // namespace biggl
