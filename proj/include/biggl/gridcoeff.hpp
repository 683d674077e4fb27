#pragma once

#include "biggl/poly.hpp"

#include <vector>

namespace biggl {

// Per-variable evaluation grid; each point set must have distinct entries.
using Grid = std::vector<std::vector<Rat>>;

// sum_{a in A} a^k / prod_{b != a} (a - b); zero for k < |A|-1 and one at
// k = |A|-1.
Rat lagrange_sum(const std::vector<Rat>& A, int k);

// Coefficient of the monomial prod X_i^{d_i} of g, read off from the values
// of g on grid sets of sizes d_i + 1. Symbolic coefficients pass through.
Poly grid_coefficient(const Poly& g, const std::vector<Var>& vars, const std::vector<int>& degrees,
                      const Grid& grid);

// True iff g (with per-variable degree <= bound) vanishes at every point of
// points^m, where the points may be symbols; the degree bound makes a true
// result equivalent to g = 0.
bool vanishing_test(const Poly& g, const std::vector<Var>& vars, int per_var_degree_bound,
                    const std::vector<Poly>& points);

}  // namespace biggl
