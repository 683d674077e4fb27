#pragma once

#include "biggl/report.hpp"
#include "biggl/weightfunc.hpp"
#include "biggl/weyl.hpp"

#include <string>
#include <vector>

namespace biggl {

// Diagonal models of the generators on the weight diagram of the m-th
// symmetric power of the vector representation.
WeightFunc gen_phat(int k, int n, int m);
WeightFunc gen_fhat(int p, int q, int n, int m);
WeightFunc gen_mhat(int k, int n, int m);

// Expression of the k-th derived generator through P1..Pk and c-scalars.
Poly m_p_transfer(int k, int n, int m);
// Inverse expressions P_k = poly(M, c), k = 1..kmax.
std::vector<Poly> p_in_terms_of_m(int kmax, int n, int m);

struct PresentationRing {
    std::vector<std::string> generators;
    std::vector<Poly> relations;  // integer-cleared, canonical order

    std::string text() const;
    std::string json() const;
};

enum class Basis { P, M };
enum class AlgebraKind { GL, SL };

// Generators-and-relations description of the big algebra of the m-th
// symmetric power (n <= 3, m <= 4 supported).
PresentationRing present(int n, int m, Basis basis, AlgebraKind alg);

// The defining relation list in the P basis before any elimination.
std::vector<Poly> capelli_style_relations(int n, int m);

// Evaluate a relation polynomial in the P/M/c symbols as a WeightFunc;
// for the traceless variant the last t variable is substituted so that
// t_1 + ... + t_n = 0.
WeightFunc eval_relation(const Poly& rel, int n, int m, Basis basis, AlgebraKind alg);

Report relation_check_capelli_style(int n, int m);
Report present_soundness_check(int n, int m, Basis basis, AlgebraKind alg);

// The operator L(Y^alpha) on one column of variables (r = 1), with full
// y-dependent coefficients.
WeylOp power_op(int n, int alpha);

// Diagonal eigenvalues: checks that the Cartan restriction of f_pq acts on
// each monomial x^mu by the value of gen_fhat.
Report consistency_bigelem_vs_weightfunc(int p, int q, int n, int m);

// Symmetric-function model: f is a polynomial in the p[] symbols with
// coefficients allowed in the c[] symbols.
WeightFunc upsilon(const Poly& f, int n, int m);
Report upsilon_injectivity_check(int n, int m);
Report upsilon_multiplicativity_check(int n, int m, int pairs, unsigned seed);

// Induced first-order operator on the weight-diagram model.
WeightFunc dhat_plethystic(const Poly& f, const Poly& g, int n, int m);
Report dhat_consistency(const std::vector<int>& alphas, int n, int m);

// Polarized power-sum model: elements are polynomials in p[a][0], p[a][1].
Poly di_normalize(const Poly& e, int n);
Poly dhat_xy(const Poly& e, int n);
Poly di_eval(const Poly& e, const std::vector<int>& mu, int n);
Report dhat_xy_consistency(int n, int m, int max_degree);

}  // namespace biggl
