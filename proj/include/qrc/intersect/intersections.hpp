#pragma once

#include <vector>

#include "qrc/intersect/bigfloat.hpp"
#include "qrc/polyengine/sparse_poly.hpp"

namespace qrc {

// One validated affine intersection point of two plane curves in (c, d).
struct RootCluster {
  BigComplex c, d;
  // Relative residuals of the point in each input polynomial (absolute
  // value divided by the coefficient scale at the point).
  BigFloat residualFirst, residualSecond;
  // True when polishing behaved like a simple (transverse) root and the
  // point never collided with another cluster.
  bool simple = true;
  // True when the d-coordinate is exactly zero (certified by exact
  // arithmetic on the d = 0 restrictions, never by numerical smallness).
  bool dExactlyZero = false;

  explicit RootCluster(long precisionBits = 64)
      : c(precisionBits),
        d(precisionBits),
        residualFirst(precisionBits),
        residualSecond(precisionBits) {}
};

struct IntersectionResult {
  long count = 0;
  std::vector<RootCluster> points;
};

// Counts the affine intersection points of two coprime curves f = g = 0 in
// the (c, d) plane.
//
// Pipeline: eliminate d by an exact resultant; find the c-roots of its
// squarefree part; per root, slice both inputs at that c value, strip the
// numerically vanishing extreme coefficients (trailing strips are exactly
// the d = 0 roots, certified separately; leading strips are leading
// coefficients that vanish at this c), and read d-candidates off the
// lower-degree slice; validate every candidate against BOTH original
// slices with residual below 2^-(precisionBits/2) relative to the
// coefficient scale at the point; deduplicate at relative distance 2^-64.
// Points with d = 0 are decided exactly: the gcd over Q of f(c,0) and
// g(c,0) certifies membership, and such points are dropped when
// excludeDZero is set.  The whole computation is repeated eliminating c
// instead, and the two counts must agree.
//
// Throws std::domain_error when an input is zero and std::runtime_error on
// a common component, an elimination-direction mismatch, a validation
// failure, or cluster ambiguity at the given precision (the caller should
// raise the precision).
IntersectionResult affine_intersections(const SparsePoly& f, const SparsePoly& g,
                                        bool excludeDZero, long precisionBits);

}  // namespace qrc
