#pragma once

#include "biggl/poly.hpp"
#include "biggl/weyl.hpp"

#include <string>

namespace biggl {

// Structured mirrors of the canonical text forms: terms in canonical order,
// coefficients as exact "p/q" strings, monomials as name -> exponent maps.
std::string poly_json(const Poly& p);
std::string weylop_json(const WeylOp& w);

}  // namespace biggl
