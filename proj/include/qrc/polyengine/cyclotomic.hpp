#pragma once

#include <map>
#include <variant>

#include "qrc/exactcore/rational.hpp"
#include "qrc/polyengine/sparse_poly.hpp"

namespace qrc {

// q-th cyclotomic polynomial in one variable (Moebius product with exact
// divisions).
UniPoly cyclotomic_poly(long q);

// Minimal polynomial of 2cos(2*pi/q) over Q, monic, q >= 3; derived from the
// palindromic cyclotomic polynomial through the substitution z + 1/z.
UniPoly psi_poly(long q);

// Primitive integer polynomial of degree phi(q)/2 whose roots are the
// parameters c with 1/c = -4 cos^2(pi p/q), 1 <= p < q, gcd(p, q) = 1.
// Positive leading coefficient.  q >= 3 (no finite such parameter at q = 2).
UniPoly phi_tilde_uni(long q);
SparsePoly cpq_minimal_poly(long q);

enum class RestrictLine { DZero, BZero, EZero };

struct CpqRef {
  long q;
};
using PointRef = std::variant<Rat, CpqRef>;

// Restrict the polynomial to the given line and return the order of
// vanishing at the reference point: multiplicity of the rational root, or
// the exponent of phi-tilde_q in the restriction for a CpqRef.
long restrict_and_order(const SparsePoly& p, RestrictLine line, const PointRef& at);

// Complete factorization of the d=0 restriction as unit * c^a * prod
// phi-tilde_q^{e_q}.  Raises when the restriction vanishes or a non-unit
// cofactor survives (an unexpected boundary point).
struct FactorProfile {
  long cPower = 0;
  std::map<long, long> exponents;
  Int unit;
};
FactorProfile factor_profile_on_line(const SparsePoly& p);

}  // namespace qrc
