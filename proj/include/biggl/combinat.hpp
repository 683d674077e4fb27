#pragma once

#include "biggl/rational.hpp"

#include <functional>
#include <vector>

namespace biggl {

// Tuples are 1-based index lists; subsets are strictly increasing tuples.
using Tuple = std::vector<int>;

// All k-element subsets of [m], in lexicographic order.
std::vector<Tuple> subsets(int m, int k);
// All k-tuples of distinct elements of [m].
std::vector<Tuple> distinct_tuples(int m, int k);
// All k-tuples with entries in [m].
std::vector<Tuple> all_tuples(int m, int k);

// Calls fn(sigma, sign) for every permutation of [n]; sigma[l-1] = sigma(l).
void for_each_permutation(int n, const std::function<void(const Tuple&, int)>& fn);

int perm_sign(const Tuple& sigma);
Tuple perm_inverse(const Tuple& sigma);
// (sigma I)(l) = I(sigma^{-1}(l)).
Tuple apply_perm(const Tuple& sigma, const Tuple& I);

// Number of partitions of a k-element set into l non-empty blocks.
Int stirling2(int k, int l);

// Sign of the unique permutation mapping tuple J to tuple I, or 0 if the
// two tuples differ as sets. Entries must be pairwise distinct.
int sgn_pair(const Tuple& I, const Tuple& J);

// sgn_pair of the concatenations; blocks within one list must be disjoint.
int sgn_block(const std::vector<Tuple>& I_blocks, const std::vector<Tuple>& J_blocks);

// Relative sign of the pair (I2, J2) inside (I1, J1); zero unless
// I1 \ I2 = J1 \ J2 as (|I1|-|I2|)-element sets.
int epsilon(const Tuple& I1, const Tuple& J1, const Tuple& I2, const Tuple& J2);

// Reference evaluation of epsilon by exhausting all admissible permutation
// pairs; returns the common sign and checks that it is well defined.
int epsilon_search(const Tuple& I1, const Tuple& J1, const Tuple& I2, const Tuple& J2);

// Subtuple of I at the positions listed in V (1-based positions).
Tuple subtuple(const Tuple& I, const Tuple& V);

}  // namespace biggl
