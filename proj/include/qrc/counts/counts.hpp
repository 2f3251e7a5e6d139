#pragma once

#include <optional>

#include "qrc/exactcore/integer.hpp"
#include "qrc/exactcore/rational.hpp"

namespace qrc {

// Convention selector for the nu' limb-count function.  The two conventions
// agree everywhere except at argument j = q:
//   PaperDisplay     : nu'_q(q) = 0  (the tabulated closed-form convention)
//   MarkovRecurrence : nu'_q(q) = 1  (the transfer-matrix recurrence)
enum class Variant { PaperDisplay, MarkovRecurrence };

// Short stable tag used in CLI flags and report keys: "paper" / "markov".
const char* variant_name(Variant v);

// A count together with the convention that produced it (empty when the
// value is convention-independent).
struct CountValue {
  Int value;
  std::optional<Variant> variant;
};

// Growth data for eta_iv(n, .): coefficient of 2^m and the bound on the
// remainder term.
struct AsymptoticData {
  Rat coefficient;
  Int bound;
};

// Number of limb classes of denominator q at level n: with r = n mod q,
//   q ∤ n : (2^{n-1} - 2^{r-1}) / (2^q - 1)
//   q | n : (2^{n-1} - 1/2) / (2^q - 1) + 1/2
// Evaluated in exact rationals; a non-integral value throws.
Int nu(long q, long n);

// nu'_q(j) under the chosen convention; see Variant above.
Int nu_prime(long q, long j, Variant v);

// Count of two-cycle component pairs with periods (n, m); symmetric in its
// arguments.  The convention selector only reaches the eta_ii(gcd(n,m))
// term, so results differ between variants only when gcd(n,m) >= 6.
Int eta_iv(long n, long m, Variant v = Variant::PaperDisplay);

// Moebius inversion of eta_iv in the first argument: counts pairs whose
// first cycle has period exactly n.
Int eta_iv_exact_first(long n, long m, Variant v = Variant::PaperDisplay);

// Coefficient C_n of 2^m in the large-m expansion of eta_iv(n, m).
Rat eta_iv_coefficient(long n);

// Remainder eta_iv(n,m) - C_n * 2^m; |epsilon| <= epsilon_bound(n,m).
Rat epsilon(long n, long m, Variant v = Variant::PaperDisplay);
Int epsilon_bound(long n, long m);

// Count of period-m one-cycle components whose cycle passes through the
// j-th marked sector, 1 <= j <= m-1.
Int eta_ii_mj(long m, long j, Variant v);

// Closed form for sum_{j=1}^{m-1} eta_ii_mj(m, j, v).
Int eta_ii_weighted(long m, Variant v);

// Count of one-cycle components of exact period m (m >= 2).
Int eta_prime_ii(long m, Variant v);

// Count of one-cycle components of period dividing m.
Int eta_ii(long m, Variant v);

// Same count as eta_iv, reorganized around the product of the two curve
// degrees (the leading block) with the corrections written separately.
// Used to certify that both arrangements agree.
Int eta_iv_from_degree_product(long n, long m, Variant v = Variant::PaperDisplay);

// The part of the curve-degree product not absorbed at the shared
// root-of-unity parameters: the total intersection mass of the two period
// curves away from the degenerate line d = 0.  Convention-independent.
Int curve_pair_residual(long n, long m);

}  // namespace qrc
