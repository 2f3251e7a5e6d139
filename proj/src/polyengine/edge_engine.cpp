#include "qrc/polyengine/edge_engine.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qrc {

PqFacts pq_facts(long n) {
  if (n < 1) throw std::domain_error("pq_facts: n >= 1 required");
  // Base n = 2: P_2 = 1, Q_2 = 1 (n = 1 has Q_1 = 0; facts start where both
  // members are nonzero, the recurrence below reproduces n = 2 from it).
  PqFacts f;
  f.degP = 0;
  f.degQ = 0;
  f.degCP = f.degCQ = f.degDP = f.degDQ = 0;
  f.dSliceDegP = f.dSliceDegQ = f.cSliceDegP = f.cSliceDegQ = 0;
  f.constP = Int(1);
  f.constQ = Int(1);
  f.coeffsPositive = true;
  if (n == 1) {
    // P_1 = 1, Q_1 = 0.
    f.constQ = Int(0);
    return f;
  }
  for (long i = 2; i < n; ++i) {
    PqFacts g;
    // P' = P^2 + c P Q + d Q^2 ; Q' = P^2, all summands in the positive cone.
    g.degP = std::max({2 * f.degP, 1 + f.degP + f.degQ, 1 + 2 * f.degQ});
    g.degQ = 2 * f.degP;
    g.degCP = std::max({2 * f.degCP, 1 + f.degCP + f.degCQ, 2 * f.degCQ});
    g.degCQ = 2 * f.degCP;
    g.degDP = std::max({2 * f.degDP, f.degDP + f.degDQ, 1 + 2 * f.degDQ});
    g.degDQ = 2 * f.degDP;
    // d = 0 slice obeys p' = p^2 + c p q, q' = p^2.
    g.dSliceDegP = std::max(2 * f.dSliceDegP, 1 + f.dSliceDegP + f.dSliceDegQ);
    g.dSliceDegQ = 2 * f.dSliceDegP;
    // c = 0 slice obeys u' = u^2 + d v^2, v' = u^2.
    g.cSliceDegP = std::max(2 * f.cSliceDegP, 1 + 2 * f.cSliceDegQ);
    g.cSliceDegQ = 2 * f.cSliceDegP;
    g.constP = f.constP * f.constP;
    g.constQ = f.constP * f.constP;
    g.coeffsPositive = f.coeffsPositive;
    f = g;
  }
  return f;
}

RsFacts rs_facts(long k) {
  if (k < 1) throw std::domain_error("rs_facts: k >= 1 required");
  // Leading (top-degree) homogeneous parts of R and S as binary forms in
  // (c, d): a form of degree D is stored by c-exponent, so a coefficient
  // vector f encodes sum_i f[i] c^i d^{D-i}.  In R' = R^2 + cRS + dS^2,
  // S' = R^2 the top-degree candidates tie at every step (deg R and deg S
  // differ by at most one), so the leading forms are materialized and
  // checked nonzero level by level rather than argued monomial-by-monomial.
  UniPoly fR(std::vector<Int>{Int(0), Int(0), Int(-1)});  // top(R_1) = -c^2
  UniPoly fS = UniPoly::constant(Int(4));                 // top(S_1) = 4d
  long degR = 2, degS = 1;
  long botR = 1, botS = 1;
  for (long i = 1; i < k; ++i) {
    const long dRR = 2 * degR;          // R^2
    const long dRS = 1 + degR + degS;   // cRS
    const long dSS = 1 + 2 * degS;      // dS^2
    const long m = std::max({dRR, dRS, dSS});
    UniPoly nf;                                        // leading form of R'
    if (dRR == m) nf = nf + fR.square();               // c-shift 0
    if (dRS == m) nf = nf + (fR * fS).shiftedUp(1);    // extra factor c
    if (dSS == m) nf = nf + fS.square();               // extra factor d
    if (nf.isZero()) throw std::logic_error("rs_facts: leading form cancelled");
    UniPoly nS = fR.square();  // S' = R^2 exactly; a square cannot vanish
    // Trailing degrees: 2*botR beats 1 + botR + botS and 1 + 2*botS
    // strictly (botR = botS throughout), so min deg R' = 2^i comes from the
    // R^2 branch alone and its form stays the single d-power (4d)^{2^i}.
    if (!(2 * botR < 1 + botR + botS && 2 * botR < 1 + 2 * botS))
      throw std::logic_error("rs_facts: trailing-form tie");
    botS = 2 * botR;
    botR = 2 * botR;
    fR = std::move(nf);
    fS = std::move(nS);
    degR = m;
    degS = dRR;
  }
  RsFacts f;
  f.degR = degR;
  f.degS = degS;
  f.minDegR = botR;
  f.minDegS = botS;
  f.minFormRSingleDMonomial = true;
  f.topRExpC = fR.degree();
  f.topRExpD = degR - fR.degree();
  // G = cR + 2dS: leading candidates c*top(R) at 1 + degR and 2d*top(S) at
  // 1 + degS; materialize their sum on the top degree and require it
  // nonzero, giving deg G = 1 + deg R.
  UniPoly fG = fR.shiftedUp(1);
  if (degS == degR) fG = fG + fS.scaled(Int(2));
  if (fG.isZero()) throw std::logic_error("rs_facts: G leading form cancelled");
  f.degG = 1 + degR;
  return f;
}

TuFacts tu_facts(long m) {
  if (m < 1) throw std::domain_error("tu_facts: m >= 1 required");
  long degT = 1, degU = 1;  // T_1 = a, U_1 = b - 1
  for (long i = 1; i < m; ++i) {
    // U' = T^2 + 2TU + bU^2: the last summand exceeds the others strictly
    // in degree, so its (exact) product degree is the degree of the sum.
    const long cand = 1 + 2 * degU;
    if (!(cand > 2 * degT && cand > degT + degU))
      throw std::logic_error("tu_facts: dominance lost");
    const long nT = 1 + 2 * degU;
    degU = cand;
    degT = nT;
  }
  TuFacts f;
  f.degT = degT;
  f.degU = degU;
  return f;
}

namespace {

constexpr long kTildeCap = 14;

struct TildeLevel {
  UniPoly t, u;
  bool dConditionChecked = false;  // 2u - t coefficientwise nonnegative (even levels)
};

std::mutex g_tildeMutex;
std::vector<TildeLevel> g_tilde;  // index m-1

void ensureTilde(long m) {
  if (m > kTildeCap) throw std::logic_error("ensureTilde: beyond materialization cap");
  std::lock_guard<std::mutex> lock(g_tildeMutex);
  if (static_cast<long>(g_tilde.size()) >= m) return;
  if (g_tilde.empty()) {
    TildeLevel l1;
    l1.t = UniPoly::monomial(Int(1), 1);  // x
    l1.u = UniPoly::constant(Int(1));
    g_tilde.push_back(std::move(l1));
    TildeLevel l2;
    l2.t = UniPoly::constant(Int(1));
    l2.u = UniPoly(std::vector<Int>{Int(2), Int(1)});  // x + 2
    UniPoly d2 = l2.u.scaled(Int(2)) - l2.t;
    if (!d2.allCoeffsNonNegative()) throw std::logic_error("tilde: D_2 has a negative coefficient");
    l2.dConditionChecked = true;
    g_tilde.push_back(std::move(l2));
  }
  while (static_cast<long>(g_tilde.size()) < m) {
    const long level = static_cast<long>(g_tilde.size());  // building level+1
    const TildeLevel& cur = g_tilde.back();
    TildeLevel next;
    if (level % 2 == 0) {
      // 2k -> 2k+1: Tt = x Ut^2 ; Ut = Tt_{2k} D_{2k}.
      UniPoly dPoly = cur.u.scaled(Int(2)) - cur.t;
      if (!dPoly.allCoeffsNonNegative())
        throw std::logic_error("tilde: D condition failed at even level");
      next.t = cur.u.square().shiftedUp(1);
      next.u = cur.t * dPoly;
    } else {
      // 2k+1 -> 2k+2: Tt = Ut_{2k+1}^2 ; Ut = Ut_{2k}^2 (x Ut_{2k}^2 + 2 Tt_{2k} D_{2k}).
      const TildeLevel& even = g_tilde[static_cast<size_t>(level - 2)];
      UniPoly dPoly = even.u.scaled(Int(2)) - even.t;
      UniPoly u2 = even.u.square();
      next.t = cur.u.square();
      next.u = u2 * (u2.shiftedUp(1) + (even.t * dPoly).scaled(Int(2)));
    }
    if (!next.t.allCoeffsPositive() || !next.u.allCoeffsPositive())
      throw std::logic_error("tilde: positivity lost at a materialized level");
    if (static_cast<long>(g_tilde.size() + 1) % 2 == 0) {
      UniPoly dPoly = next.u.scaled(Int(2)) - next.t;
      if (!dPoly.allCoeffsNonNegative())
        throw std::logic_error("tilde: D condition failed at new even level");
      next.dConditionChecked = true;
    }
    g_tilde.push_back(std::move(next));
  }
}

}  // namespace

long tilde_materialization_cap() { return kTildeCap; }

std::pair<UniPoly, UniPoly> tilde_polys(long m) {
  if (m < 1 || m > kTildeCap) throw std::domain_error("tilde_polys: level not materialized");
  ensureTilde(m);
  std::lock_guard<std::mutex> lock(g_tildeMutex);
  return {g_tilde[static_cast<size_t>(m - 1)].t, g_tilde[static_cast<size_t>(m - 1)].u};
}

TildeFacts tilde_facts(long m) {
  if (m < 1 || m > 16) throw std::domain_error("tilde_facts: 1 <= m <= 16 required");
  TildeFacts f;
  if (m <= kTildeCap) {
    ensureTilde(m);
    std::lock_guard<std::mutex> lock(g_tildeMutex);
    const TildeLevel& l = g_tilde[static_cast<size_t>(m - 1)];
    f.degT0 = l.t.degree();
    f.degU0 = l.u.degree();
    f.degSum = std::max(f.degT0, f.degU0);  // degrees never coincide; verified below
    if (f.degT0 == f.degU0)
      f.degSum = (l.t + l.u).degree();  // exact fallback (never taken for this family)
    f.materialized = true;
    f.tildeAllPositive = l.t.allCoeffsPositive() && l.u.allCoeffsPositive();
    // Displayed-sign positivity: T0_m(x) = (-1)^m Tt_m(-x), U0_m(x) = -Ut_m(-x).
    UniPoly t0 = l.t.reflected();
    if (m % 2 != 0) t0 = -t0;
    UniPoly u0 = -(l.u.reflected());
    f.literalAllPositive = t0.allCoeffsPositive() && u0.allCoeffsPositive();
    return f;
  }
  // Structural levels 15 and 16 from the materialized level 14: every
  // factor below has positive coefficients and D_14 was checked nonnegative,
  // so product degrees are exact and positivity propagates.
  ensureTilde(kTildeCap);
  long t14, u14;
  {
    std::lock_guard<std::mutex> lock(g_tildeMutex);
    const TildeLevel& l = g_tilde[kTildeCap - 1];
    if (!l.dConditionChecked) throw std::logic_error("tilde_facts: D_14 unchecked");
    t14 = l.t.degree();
    u14 = l.u.degree();
  }
  if (!(u14 > t14)) throw std::logic_error("tilde_facts: degree order at level 14 unexpected");
  const long degT15 = 1 + 2 * u14;       // x * Ut_14^2
  const long degU15 = t14 + u14;         // Tt_14 * D_14, deg D_14 = u14
  if (m == 15) {
    f.degT0 = degT15;
    f.degU0 = degU15;
    f.degSum = std::max(degT15, degU15);
    f.materialized = false;
    f.tildeAllPositive = true;
    return f;
  }
  f.degT0 = 2 * degU15;                            // Ut_15^2
  f.degU0 = 2 * u14 + std::max(1 + 2 * u14, t14 + u14);  // Ut_14^2 (x Ut_14^2 + 2 Tt_14 D_14)
  f.degSum = std::max(f.degT0, f.degU0);
  f.materialized = false;
  f.tildeAllPositive = true;
  return f;
}

}  // namespace qrc
