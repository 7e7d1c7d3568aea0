#pragma once

// Published closed forms used as golden vectors.

#include <vector>

#include "cubicmaps/polynomial.hpp"

namespace cubicmaps {

/// J_1(y)..J_6(y) as printed in closed form; index 0 is unused (zero).
const std::vector<DensePolynomial>& reference_j_polynomials();

}  // namespace cubicmaps
