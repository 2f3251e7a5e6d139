#include "qrc/intersect/golden.hpp"

namespace qrc::golden {

std::optional<Int> eta_prime_ii_table(long m) {
  switch (m) {
    case 2: return Int(1);
    case 3: return Int(2);
    case 4: return Int(6);
    case 5: return Int(20);
    case 6: return Int(47);
    case 7: return Int(130);
    case 8: return Int(295);
    default: return std::nullopt;
  }
}

std::optional<Int> eta_ii_table(long m, long j) {
  if (j < 1 || j >= m) return std::nullopt;
  static const long rows[6][7] = {
      /* m=3 */ {1, 1, 0, 0, 0, 0, 0},
      /* m=4 */ {2, 2, 2, 0, 0, 0, 0},
      /* m=5 */ {5, 5, 5, 5, 0, 0, 0},
      /* m=6 */ {10, 10, 11, 10, 10, 0, 0},
      /* m=7 */ {21, 21, 23, 23, 21, 21, 0},
      /* m=8 */ {42, 42, 47, 45, 47, 42, 42},
  };
  if (m < 3 || m > 8) return std::nullopt;
  return Int(rows[m - 3][j - 1]);
}

std::optional<Rat> eta_iv_coefficient_table(long n) {
  switch (n) {
    case 1: return Rat(1, 2);
    case 2: return Rat(1, 3);
    case 3: return Rat(23, 21);
    case 4: return Rat(78, 35);
    case 5: return Rat(6103, 1085);
    case 6: return Rat(202371, 19530);
    case 7: return Rat(29316701, 1240155);
    default: return std::nullopt;
  }
}

const char* citation_eta_prime_ii() { return "golden:one-cycle-exact-period-table"; }
const char* citation_eta_ii() { return "golden:one-cycle-sector-table"; }
const char* citation_eta_iv_coefficients() { return "golden:two-cycle-growth-coefficients"; }

}  // namespace qrc::golden
