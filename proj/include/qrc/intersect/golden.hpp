#pragma once

#include <optional>
#include <vector>

#include "qrc/exactcore/integer.hpp"
#include "qrc/exactcore/rational.hpp"

namespace qrc::golden {

// Frozen reference datasets.  These are stored values, never recomputed:
// the library's own results are compared against them, and adjudication
// may conclude that a stored value is the one that disagrees.

// Tabulated count of one-cycle components of exact period m, 2 <= m <= 8.
std::optional<Int> eta_prime_ii_table(long m);

// Tabulated per-sector one-cycle counts, 3 <= m <= 8, 1 <= j < m.
std::optional<Int> eta_ii_table(long m, long j);

// Tabulated leading coefficients of the two-cycle growth law, n = 1..7.
std::optional<Rat> eta_iv_coefficient_table(long n);

// Citation keys naming the dataset each value was frozen from.
const char* citation_eta_prime_ii();
const char* citation_eta_ii();
const char* citation_eta_iv_coefficients();

}  // namespace qrc::golden
