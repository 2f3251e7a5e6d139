#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qrc/counts/counts.hpp"
#include "qrc/exactcore/integer.hpp"
#include "qrc/polyengine/sparse_poly.hpp"

namespace qrc {

// Case identifiers for the two families of curve pairs the catalog counts:
// IV(n, m) pairs the degree-n and degree-m period curves of the critical
// orbit at 0; II(m, j) pairs the curve sending 0 onto the co-critical point
// in j steps with the curve sending that point back to 0 in m - j steps.
struct CaseId {
  enum class Kind { IV, II };
  Kind kind;
  long a = 0;  // IV: n,      II: m
  long b = 0;  // IV: m,      II: j
};
std::string case_name(const CaseId& id);

enum class BoundaryLocation { AtInfinityLine, Origin00, VertexD, Cpq };
enum class MultiplicitySource { ClosedForm, ExactLocal };
const char* source_name(MultiplicitySource s);

struct BoundaryItem {
  BoundaryLocation location;
  long q = 0;      // Cpq only: the cyclotomic index
  long point = 0;  // Cpq only: 1..phi(q)/2, which conjugate point
  Int multiplicity;
  MultiplicitySource source;
};

struct BezoutLedger {
  Int degreeFirst, degreeSecond;
  Int product;
  std::vector<BoundaryItem> items;
  Int residual;  // product - sum of item multiplicities; >= 0
};

// The two defining polynomials of a case, in the (c, d) plane.
std::pair<SparsePoly, SparsePoly> case_polys(const CaseId& id);

// Itemized Bezout accounting for one case.
//
// Degrees come from the closed forms (and are checked against the actual
// polynomials when the ExactLocal source is selected).  Items: IV cases
// carry one item per boundary point c_{p,q} on d = 0 (3 <= q <= n, phi(q)/2
// conjugate points each); II cases carry an Origin00 item, a VertexD item,
// and the c_{p,q} items for 3 <= q <= max(j, m-j).  With the ClosedForm
// source, multiplicities are the counting-function products (the variant
// selects the nu' flavor on II cases; IV cases are variant-free).  With the
// ExactLocal source, every multiplicity is computed from the polynomials:
// tangent-cone orders at the origin, degree defects at the vertex, and
// exact factor profiles on d = 0 with the product rule across the two
// curves.  Inconsistencies between the sources' item sets raise.
BezoutLedger bezout_ledger(const CaseId& id, Variant variant, MultiplicitySource source);

}  // namespace qrc
