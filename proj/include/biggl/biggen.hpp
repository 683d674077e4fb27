#pragma once

#include "biggl/weyl.hpp"

namespace biggl {

// Sum of principal k x k minors of [y_{ij}]; the coefficients of the
// characteristic polynomial. c_0 = 1.
Poly c_k(int n, int k);

// First-order operator F -> sum_{i,j} (dF/dy_{ji}) * L(E_{ij}), with the
// composition on the right.
WeylOp kirillov_wei(const WeylOp& f, int n, int r);

// q-fold application of the operator above to c_{p+q}.
WeylOp m_pq_direct(int n, int r, int p, int q);
// The same element in closed normal form.
WeylOp m_pq_closed(int n, int r, int p, int q);

// Generators built from paired minors of X and D with a Y-minor scalar.
WeylOp f_pq(int n, int r, int p, int q);

// Expansion of m_pq through the f generators.
WeylOp m_from_f(int n, int r, int p, int q);

// Substitute y_{ij} -> delta_{ij} t_i in the coefficients.
WeylOp restrict_cartan(const WeylOp& f, int n);

// Cartan form of f_pq evaluated directly from its diagonal expansion.
WeylOp f_pq_cartan(int n, int r, int p, int q);

}  // namespace biggl
