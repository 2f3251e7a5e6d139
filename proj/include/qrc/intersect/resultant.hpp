#pragma once

#include "qrc/polyengine/sparse_poly.hpp"
#include "qrc/polyengine/unipoly.hpp"

namespace qrc {

// Exact resultant of two polynomials in the variables {c, d} with respect to
// the eliminated variable.  Computed by evaluating both inputs at integer
// nodes of the surviving variable (skipping nodes that kill either leading
// coefficient), taking exact univariate subresultant-PRS resultants per node,
// and reconstructing the unique integer polynomial through the samples by
// Newton interpolation over the rationals.
//
// Convention at degree zero in the eliminated variable: if deg_v f = 0 the
// resultant is f^{deg_v g} (and symmetrically), so resultant(f, 1, v) = 1.
//
// Throws std::domain_error if either input is zero or involves variables
// other than {c, d}, and std::runtime_error if the resultant is identically
// zero (the inputs share a common component).
SparsePoly resultant(const SparsePoly& f, const SparsePoly& g, Var eliminate);

}  // namespace qrc
