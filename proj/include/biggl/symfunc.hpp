#pragma once

#include "biggl/poly.hpp"

#include <vector>

namespace biggl {

// Elementary, power-sum and complete homogeneous symmetric polynomials in
// the given variables.
Poly elementary_sym(int p, const std::vector<Var>& vars);
Poly power_sum(int r, const std::vector<Var>& vars);
Poly complete_sym(int r, const std::vector<Var>& vars);

// e_k expanded in the power-sum symbols p[1..k]. The expansion does not
// depend on the number of underlying variables.
Poly girard_waring_e_from_p(int k);
// p_k expanded in the elementary symbols e[1..N] of N variables.
Poly girard_waring_p_from_e(int k, int N);

// The unique polynomial in v[1..N] whose value at (p_1,...,p_N) of N
// variables is p_k of those variables.
Poly theta_poly(int k, int N);

// Substitute p[r] -> sum_i mu_i t_i^r (+ the r-th power image of the
// optional shift, a linear combination of t variables) into f. Variables
// outside the p family pass through unchanged.
Poly plethysm_eval(const Poly& f, const std::vector<int>& mu, int n,
                   const Poly& shift = Poly(0));

// Calls fn(i) for every exponent vector i[0..len-1] >= 0 with
// sum_j (j+1) * i[j] = total.
void for_each_weighted_partition(int total, int len,
                                 const std::function<void(const std::vector<int>&)>& fn);

}  // namespace biggl
