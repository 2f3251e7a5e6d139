#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qrc/exactcore/rational.hpp"
#include "qrc/polyengine/sparse_poly.hpp"

namespace qrc {

// Recursive polynomial families.  Each id maps to a deterministic generator;
// results are memoized per process behind a mutex.
enum class FamilyId {
  P,
  Q,
  R,
  S,
  G,
  CPplus2dQ,
  T,
  U,
  T0,
  U0,
  R1,
  S1,
  LrCubic,
  Y1Cubic,
  CpqMinimal,
  GleasonOrbit,
};

const char* family_name(FamilyId f);
std::optional<FamilyId> family_from_name(const std::string& name);

// Index budget guard.  The default budget is 12; the univariate T0/U0
// chains run 4 levels further (16) because their coefficient growth is far
// tamer than the bivariate families'.
long family_budget();
void set_family_budget(long budget);
long family_budget_for(FamilyId f);

// Exact generator.  `r` is consumed only by LrCubic (its curve parameter,
// 0 < r < 1); all other families reject a supplied parameter.
SparsePoly family_poly(FamilyId family, long index, const std::optional<Rat>& r = std::nullopt);

// The displayed degree-3 curve for parameter r, cleared to a primitive
// integer polynomial with positive leading coefficient.  Asserts that its
// only degree-3 monomial is c³ and that the constant term vanishes.
SparsePoly lr_cubic(const Rat& r);

// Free-function spelling of SparsePoly::homogenized (introduces e).
SparsePoly homogenize(const SparsePoly& p, long targetDegree = -1);

// The critical-orbit pair T/U specialized at b = 0 with the common a-power
// stripped: an independent generation route for (T0_m, U0_m).
std::pair<UniPoly, UniPoly> t0_u0_from_b0(long m);

}  // namespace qrc
