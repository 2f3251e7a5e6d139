#pragma once

#include "qrc/exactcore/integer.hpp"

namespace qrc {

// Closed-form degrees of the recursive polynomial families (after
// homogenization) and closed-form local intersection multiplicities.
// polyengine cross-checks these against materialized polynomials.

// deg P_n (homogenized):  (2^n - 3 - (-1)^n) / 6.
Int family_p_degree(long n);

// deg G_m (homogenized):  (7*2^m + 3 - (-1)^m) / 6.
Int family_g_degree(long m);

// deg (c*P_j + 2d*Q_j):   (2^j - (-1)^j + 3) / 6.
Int family_cp2dq_degree(long j);

// deg R_k:                (7*2^k - (-1)^k - 3) / 6.
Int family_r_degree(long k);

// lowest total degree of R_k: 2^{k-1}, realized by a pure d-power only.
Int family_r_min_degree(long k);

// deg R1_k (the c = 0 slice family): (5*2^k - 3 + (-1)^k) / 6.
Int family_r1_degree(long k);

// deg T_m = deg U_m = 2^m - 1.
Int family_t_degree(long m);

// deg U0_{2k} = (2^{2k} - 1) / 3.
Int family_u0_even_degree(long k);

// deg T0_{2k+1} = (2^{2k+1} + 1) / 3.
Int family_t0_odd_degree(long k);

// deg (T0_m + U0_m) = (2^m - (-1)^m) / 3.
Int family_t0u0_sum_degree(long m);

// Local multiplicity of the curve pair {c*P_j + 2d*Q_j = 0}, {R_k = 0}
// at the origin: 2^{k-1} (the first curve is smooth there, the second has
// a pure-d tangent cone of that order, and the tangent directions differ).
Int origin_multiplicity(long k);

// Local multiplicity of the same pair at the vertex at infinity:
// (1 - (-1)^j) * (2^k - (-1)^k) / 6 — zero for even j, and equal to
// deg R_k - deg R1_k for odd j.
Int vertex_multiplicity(long j, long k);

}  // namespace qrc
