#pragma once

#include <optional>
#include <utility>

#include "qrc/polyengine/unipoly.hpp"

namespace qrc {

// Exact structural facts about family members, derived by recurrences whose
// every step is certified cancellation-free (nonnegative cones, single
// monomial leading/trailing forms, or strict degree dominance).  These give
// exact degree verdicts at indices where full materialization would be
// wasteful.

// Orbit pair P_n/Q_n: every recurrence step combines polynomials with
// positive stored coefficients, so degrees add and take maxima exactly and
// no coefficient can vanish by cancellation.
struct PqFacts {
  long degP = 0, degQ = 0;
  long degCP = 0, degCQ = 0;      // degrees in c
  long degDP = 0, degDQ = 0;      // degrees in d
  long dSliceDegP = 0, dSliceDegQ = 0;  // degree of the d=0 restriction
  long cSliceDegP = 0, cSliceDegQ = 0;  // degree of the c=0 restriction
  Int constP, constQ;             // constant terms
  bool coeffsPositive = false;
};
PqFacts pq_facts(long n);  // n >= 1

// R_k/S_k: the leading form and the trailing form are single monomials for
// every k (the two candidate degrees at each step differ by parity, so a
// strict winner always exists), which certifies the degree, the minimal
// degree 2^{k-1} realized uniquely by a d-monomial, and the degree of
// G_k = cR_k + 2dS_k.
struct RsFacts {
  long degR = 0, degS = 0;
  long minDegR = 0, minDegS = 0;
  bool minFormRSingleDMonomial = false;
  // Exponents of the c-maximal monomial of R's leading form (a witness
  // monomial of top degree; the full leading form is a binary form in c, d
  // materialized internally and checked nonzero level by level).
  long topRExpC = 0, topRExpD = 0;
  long degG = 0;
};
RsFacts rs_facts(long k);  // k >= 1

// T_m/U_m: the term b*U^2 of the U-recursion strictly dominates in degree,
// so deg T_m = deg U_m = 2^m - 1 exactly.
struct TuFacts {
  long degT = 0, degU = 0;
};
TuFacts tu_facts(long m);  // m >= 1

// Reduced critical-orbit pair in the reflected variable: with
// Tt_m(x) = (-1)^m T0_m(-x) and Ut_m(x) = -U0_m(-x), every recursion step
// stays inside the positive-coefficient cone provided D_{2k} = 2 Ut_{2k} -
// Tt_{2k} keeps nonnegative coefficients; the engine materializes levels up
// to 14, checks the D condition there, and certifies levels 15 and 16
// structurally.
struct TildeFacts {
  long degT0 = 0, degU0 = 0, degSum = 0;
  bool materialized = false;
  bool tildeAllPositive = false;                // sign-normalized positivity
  std::optional<bool> literalAllPositive;       // displayed-sign positivity of
                                                // (T0_m, U0_m); set only at
                                                // materialized levels
};
TildeFacts tilde_facts(long m);  // 1 <= m <= 16

// The materialized reflected pair (Tt_m, Ut_m), m <= 14, for cross-checks.
std::pair<UniPoly, UniPoly> tilde_polys(long m);
long tilde_materialization_cap();

}  // namespace qrc
