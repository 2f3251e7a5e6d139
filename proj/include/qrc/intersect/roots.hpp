#pragma once

#include <vector>

#include "qrc/intersect/bigfloat.hpp"
#include "qrc/polyengine/unipoly.hpp"

namespace qrc {

// All complex roots of the squarefree part of p, each to roughly
// precision_bits accuracy.  Deterministic: the exact squarefree part is
// taken first (gcd with the derivative), the iteration starts on the
// Newton-polygon circles of the coefficient magnitudes, runs the
// simultaneous Aberth-Ehrlich update until every root either steps below
// 2^-(precision_bits-8) relative or reaches the evaluation noise floor (with
// an iteration cap), and finishes with per-root Newton polishing.  When the
// a-posteriori error bound says the requested accuracy was not reached (the
// coefficients are large, so working precision is the binding constraint),
// the whole iteration reruns from the exact coefficients at boosted
// precision.  Roots return sorted by (re, im).
//
// Throws std::domain_error for a zero polynomial and std::runtime_error on
// non-convergence.
std::vector<BigComplex> complex_roots(const UniPoly& p, long precisionBits);

// Root engine for polynomials with complex approximate coefficients
// (ascending order, coeffs.back() != 0 expected).  Used for the d-slices of
// bivariate systems at an approximate c-root.  `simpleRoots` reports, per
// root, whether Newton polishing contracted the way a simple root does.
// `deficitBits` is the a-posteriori accuracy shortfall: 0 when every root
// meets the requested accuracy, otherwise the number of extra working bits
// a rerun needs.  Callers holding exact coefficients retry; callers whose
// coefficients are themselves approximate cannot do better and ignore it.
struct ComplexRootSet {
  std::vector<BigComplex> roots;
  std::vector<bool> simpleRoots;
  long deficitBits = 0;
};
// precisionBits sets the accuracy target; workPrecisionBits the arithmetic
// precision (default precisionBits + 64).  Retries raise only the latter so
// the target stays fixed and the measured deficit actually closes.
ComplexRootSet roots_of_complex_poly(const std::vector<BigComplex>& coeffs, long precisionBits,
                                     long workPrecisionBits = 0);

}  // namespace qrc
