#pragma once

#include "biggl/report.hpp"

#include <functional>

namespace biggl {

// Runs fn(i) for i in [0, count), split over BIGGL_THREADS workers (default
// one). fn must only touch slot i of any shared output.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

// Pairwise commutators of the f generators, either Cartan-restricted or with
// full matrix-coordinate coefficients.
Report verify_commutativity(int n, int r, bool cartan);

// The classical square identity at full size k = n = r.
Report verify_classical_capelli(int n);

// Term-by-term expansion versus the closed normal form of the symmetrized
// determinants, over all index tuples up to length k.
Report verify_symdet_closed(int n, int r, int k);

}  // namespace biggl
