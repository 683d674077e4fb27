#pragma once

#include "biggl/report.hpp"
#include "biggl/weyl.hpp"

namespace biggl {

// rdet of the matrix with entries L(E_{I_a J_b}) + shift_a when the row and
// column indices coincide.
WeylOp capelli_rdet(const Tuple& I, const Tuple& J, const std::vector<Poly>& diag_shifts, int r);
// cdet variant with per-column shifts.
WeylOp capelli_cdet(const Tuple& I, const Tuple& J, const std::vector<Poly>& diag_shifts, int r);

// Shifts (0, 1, ..., k-1) of the classical construction.
std::vector<Poly> capelli_shifts(int k);
// Shifts (alpha - 1 - z).
std::vector<Poly> capelli_shifts_z(int k);

// Minor-sum central elements: C_k = sum over principal k x k blocks, and
// the z-shifted variant.
WeylOp capelli_generator(int n, int k, int r);
WeylOp capelli_z(int n, int k, int r);

// Verifies L(Pi_IJ) = sum_K det(X_IK) det(D_JK) for all I,J with distinct
// entries, plus skew symmetry and vanishing on repeated indices.
Report verify_cauchy_binet(int n, int r, int k);

// Verifies the expansion of the z-shifted minor sums into the plain ones.
Report verify_capelli_z_expansion(int n, int k, int r);

// Verifies that row determinants with shifts (z + a - 1) equal column
// determinants with shifts (z + k - b).
Report verify_rdet_cdet_shift(int n, int r, int k);

// Verifies [L(C_k), L(E_ij)] = 0 in the faithful r = n model.
Report centrality_check(int n, int k);

}  // namespace biggl
