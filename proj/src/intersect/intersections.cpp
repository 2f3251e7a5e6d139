#include "qrc/intersect/intersections.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qrc/intersect/resultant.hpp"
#include "qrc/intersect/roots.hpp"
#include "qrc/polyengine/unipoly.hpp"

namespace qrc {
namespace {

constexpr long kDedupBits = 64;

void requirePlaneCurve(const SparsePoly& p, const char* who) {
  if (p.isZero()) throw std::domain_error(std::string(who) + ": zero polynomial");
  for (Var v : p.usedVars())
    if (v != Var::c && v != Var::d)
      throw std::domain_error(std::string(who) + ": polynomial outside the (c, d) plane");
}

// --- exact helpers -------------------------------------------------------

// Coefficients of p grouped by the exponent of `elim`; bucket[k] is a
// polynomial in `keep`.
std::vector<UniPoly> bucketsBy(const SparsePoly& p, Var elim, Var keep) {
  const long de = std::max<long>(p.degreeIn(elim), 0);
  std::vector<std::vector<Int>> acc(static_cast<size_t>(de) + 1);
  for (const auto& [e, v] : p.terms()) {
    const size_t ke = e[static_cast<int>(elim)];
    const size_t kk = e[static_cast<int>(keep)];
    if (acc[ke].size() <= kk) acc[ke].resize(kk + 1, Int(0));
    acc[ke][kk] = v;
  }
  std::vector<UniPoly> out;
  out.reserve(acc.size());
  for (auto& row : acc) out.emplace_back(std::move(row));
  return out;
}

// gcd of all buckets: a nonconstant value means p has components on which
// the kept variable is constant (lines parallel to the eliminated axis).
UniPoly bucketContent(const std::vector<UniPoly>& buckets) {
  UniPoly g;
  for (const UniPoly& b : buckets) {
    if (b.isZero()) continue;
    g = g.isZero() ? b.primitivePart().withPositiveLeading() : gcdPoly(g, b);
    if (g.degree() == 0) break;
  }
  return g;
}

// Heuristic gcd (evaluate at a large integer, take the integer gcd,
// reconstruct in balanced digits, verify by exact division).  Verified
// results are always true divisors of the gcd; retries grow the
// evaluation point until the reconstruction captures the full gcd.
Int maxAbsCoeff(const UniPoly& p) {
  Int m(0);
  for (const Int& c : p.coeffs()) {
    Int a = c.abs();
    if (m < a) m = a;
  }
  return m;
}

UniPoly reconstructBalanced(Int value, const Int& xi) {
  std::vector<Int> digits;
  Int half = xi;
  mpz_fdiv_q_ui(half.raw(), half.raw(), 2);
  bool negate = value.sign() < 0;
  if (negate) value = -value;
  while (value.sign() != 0) {
    Int q(0), r(0);
    mpz_fdiv_qr(q.raw(), r.raw(), value.raw(), xi.raw());
    if (half < r) {
      r = r - xi;
      q = q + Int(1);
    }
    digits.push_back(r);
    value = std::move(q);
  }
  UniPoly out{std::vector<Int>(digits.begin(), digits.end())};
  return negate ? -out : out;
}

UniPoly gcdHeuristic(const UniPoly& A, const UniPoly& B) {
  if (A.isZero()) return B.primitivePart().withPositiveLeading();
  if (B.isZero()) return A.primitivePart().withPositiveLeading();
  const UniPoly a = A.primitivePart();
  const UniPoly b = B.primitivePart();
  if (a.degree() == 0 || b.degree() == 0) return UniPoly::constant(Int(1));
  // Small inputs: the exact subresultant gcd is cheap and certain.
  if (a.maxCoeffBits() <= 512 && b.maxCoeffBits() <= 512 && a.degree() <= 64 && b.degree() <= 64)
    return gcdPoly(a, b);
  Int xi = maxAbsCoeff(a);
  Int mb = maxAbsCoeff(b);
  if (xi < mb) xi = mb;
  xi = xi + xi + Int(2);
  for (int attempt = 0; attempt < 10; ++attempt) {
    const Int va = a.evalInt(xi);
    const Int vb = b.evalInt(xi);
    Int g = gcd(va, vb);
    if (g.sign() != 0) {
      UniPoly cand = reconstructBalanced(g, xi).primitivePart();
      if (!cand.isZero() && a.dividedExactly(cand).has_value() &&
          b.dividedExactly(cand).has_value())
        return cand.withPositiveLeading();
    }
    xi = xi * Int(73);
  }
  throw std::runtime_error("gcdHeuristic: no verified reconstruction");
}

// Squarefree part of a (possibly huge) integer polynomial; iterates the
// heuristic gcd so an under-reconstructed step only delays completion.
UniPoly squarefreeBig(const UniPoly& p) {
  UniPoly cur = p.primitivePart().withPositiveLeading();
  for (int round = 0; round < 64 && cur.degree() > 0; ++round) {
    const UniPoly g = gcdHeuristic(cur, cur.derivative());
    if (g.degree() <= 0) return cur;
    auto q = cur.dividedExactly(g);
    if (!q) throw std::logic_error("squarefreeBig: verified gcd does not divide");
    cur = q->primitivePart().withPositiveLeading();
  }
  return cur;
}

// --- numeric helpers -----------------------------------------------------

BigComplex evalUniComplex(const UniPoly& p, const BigComplex& z, long wp) {
  BigComplex acc(wp);
  for (long i = p.degree(); i >= 0; --i)
    acc = acc * z + BigComplex(BigFloat::fromInt(p.coeff(static_cast<size_t>(i)), wp), BigFloat(wp));
  return acc;
}

BigComplex evalSlice(const std::vector<BigComplex>& s, size_t lo, size_t hi, const BigComplex& z,
                     long wp) {
  BigComplex acc(wp);
  for (size_t i = hi; i-- > lo;) acc = acc * z + s[i];
  return acc;
}

BigFloat absEvalSlice(const std::vector<BigComplex>& s, size_t lo, size_t hi, const BigFloat& az,
                      long wp) {
  BigFloat acc(wp);
  for (size_t i = hi; i-- > lo;) acc = acc * az + s[i].abs();
  return acc;
}

// Relative residual of the exact polynomial h at the approximate point z.
bool relRootTest(const UniPoly& h, const BigComplex& z, const BigFloat& tol, long wp) {
  std::vector<BigComplex> s;
  s.reserve(static_cast<size_t>(h.degree()) + 1);
  for (long i = 0; i <= h.degree(); ++i)
    s.emplace_back(BigFloat::fromInt(h.coeff(static_cast<size_t>(i)), wp), BigFloat(wp));
  const BigFloat scale = absEvalSlice(s, 0, s.size(), z.abs(), wp);
  const BigFloat val = evalSlice(s, 0, s.size(), z, wp).abs();
  return val <= tol * scale;
}

struct Slice {
  std::vector<BigComplex> full;  // dense, ascending in the eliminated variable
  size_t lo = 0, hi = 0;         // deflated coefficient range [lo, hi)
  bool allZero = false;
};

Slice makeSlice(const std::vector<UniPoly>& buckets, const BigComplex& z, long wp,
                const BigFloat& tolDeflate) {
  Slice s;
  s.full.reserve(buckets.size());
  for (const UniPoly& b : buckets) s.full.push_back(evalUniComplex(b, z, wp));
  BigFloat sup(wp);
  for (const BigComplex& v : s.full) sup = max(sup, v.abs());
  if (sup.isZero()) {
    s.allZero = true;
    return s;
  }
  const BigFloat thr = tolDeflate * sup;
  size_t lo = 0, hi = s.full.size();
  while (lo < hi && s.full[lo].abs() <= thr) ++lo;
  while (hi > lo && s.full[hi - 1].abs() <= thr) --hi;
  if (lo == hi) {
    s.allZero = true;
    return s;
  }
  s.lo = lo;
  s.hi = hi;
  return s;
}

struct DirPoint {
  BigComplex keepVal, elimVal;
  BigFloat rf, rg;  // relative residuals in f and g
  bool simple = true;
  bool dExactZero = false;
  explicit DirPoint(long prec) : keepVal(prec), elimVal(prec), rf(prec), rg(prec) {}
};

// Roots (in `keep`) of the squarefree part of the eliminant, with an exact
// zero root split off so downstream slices at it are exact.
struct KeepRoots {
  bool hasZero = false;
  std::vector<BigComplex> others;
};

KeepRoots keepRootsOf(const SparsePoly& f, const SparsePoly& g, Var elim, Var keep,
                      long precisionBits) {
  const SparsePoly res = resultant(f, g, elim);
  KeepRoots out;
  if (res.degreeIn(keep) == 0) return out;  // constant eliminant: nothing in this direction
  UniPoly sf = squarefreeBig(res.toUni(keep));
  const long zeroOrd = sf.order();
  if (zeroOrd > 0) {
    out.hasZero = true;
    sf = sf.shiftedDown(static_cast<size_t>(zeroOrd));
  }
  if (sf.degree() >= 1) {
    // The eliminant's coefficients can be hundreds of bits wide, which makes
    // working precision (not iteration count) the accuracy constraint; the
    // engine reports the shortfall and the call reruns from the exact
    // coefficients with that many extra bits.
    long work = precisionBits + 64;
    for (int attempt = 0;; ++attempt) {
      std::vector<BigComplex> coeffs;
      coeffs.reserve(static_cast<size_t>(sf.degree()) + 1);
      for (long i = 0; i <= sf.degree(); ++i)
        coeffs.emplace_back(BigFloat::fromInt(sf.coeff(static_cast<size_t>(i)), work),
                            BigFloat(work));
      ComplexRootSet rs = roots_of_complex_poly(coeffs, precisionBits, work);
      if (rs.deficitBits <= 0) {
        out.others = std::move(rs.roots);
        break;
      }
      if (attempt == 3)
        throw std::runtime_error("affine_intersections: eliminant root accuracy unreachable");
      work += rs.deficitBits + 64;
    }
  }
  return out;
}

// One elimination direction: eliminate `elim`, root-find in `keep`, recover
// the other coordinate per root through the two slices.
std::vector<DirPoint> runDirection(const SparsePoly& f, const SparsePoly& g, Var elim, Var keep,
                                   long precisionBits) {
  const long wp = precisionBits + 64;
  const BigFloat tolDeflate = BigFloat::pow2(-(precisionBits - 32), wp);
  const BigFloat tolVal = BigFloat::pow2(-(precisionBits / 2), wp);

  const std::vector<UniPoly> fb = bucketsBy(f, elim, keep);
  const std::vector<UniPoly> gb = bucketsBy(g, elim, keep);
  // d = 0 membership is exact: the common roots of the two d = 0
  // restrictions are the roots of their gcd over Q.
  const UniPoly f0 = f.substituteZero(Var::d).isZero() ? UniPoly()
                                                       : f.substituteZero(Var::d).toUni(Var::c);
  const UniPoly g0 = g.substituteZero(Var::d).isZero() ? UniPoly()
                                                       : g.substituteZero(Var::d).toUni(Var::c);
  UniPoly h;  // nonzero iff the curves meet the line d = 0 in a finite set
  if (f0.isZero() || g0.isZero()) {
    // One curve contains the whole line d = 0; intersections on it are the
    // zeros of the other restriction.  None of the catalog curves do this.
    h = f0.isZero() ? g0 : f0;
  } else {
    h = gcdPoly(f0, g0);
  }
  // Same for the line c = 0: when root-finding in d, slice deflation strips
  // roots at c = 0, so those points are certified exactly through the gcd of
  // the c = 0 restrictions and re-added per fiber.
  const UniPoly fc0 = f.substituteZero(Var::c).isZero() ? UniPoly()
                                                        : f.substituteZero(Var::c).toUni(Var::d);
  const UniPoly gc0 = g.substituteZero(Var::c).isZero() ? UniPoly()
                                                        : g.substituteZero(Var::c).toUni(Var::d);
  UniPoly hc;
  if (fc0.isZero() || gc0.isZero()) {
    hc = fc0.isZero() ? gc0 : fc0;
  } else {
    hc = gcdPoly(fc0, gc0);
  }

  std::vector<DirPoint> pts;
  const KeepRoots kr = keepRootsOf(f, g, elim, keep, precisionBits);

  std::vector<BigComplex> keepVals = kr.others;
  if (kr.hasZero) keepVals.insert(keepVals.begin(), BigComplex(wp));

  for (size_t ri = 0; ri < keepVals.size(); ++ri) {
    const BigComplex& kv = keepVals[ri];
    const bool exactZeroRoot = kr.hasZero && ri == 0;

    if (keep == Var::d && exactZeroRoot) {
      // The whole fiber lies on d = 0: recover the c-values exactly from h.
      if (h.degree() >= 1) {
        for (const BigComplex& cv : complex_roots(h, precisionBits)) {
          DirPoint p(wp);
          p.keepVal = kv;
          p.elimVal = cv;
          p.dExactZero = true;
          // Membership is certified through h, so both residuals are exact.
          pts.push_back(std::move(p));
        }
      }
      continue;
    }

    Slice fs = makeSlice(fb, kv, wp, tolDeflate);
    Slice gs = makeSlice(gb, kv, wp, tolDeflate);

    bool elimZeroAdded = false;
    if (keep == Var::c) {
      // Certified d = 0 point over this c-root.
      if (h.degree() >= 1 && relRootTest(h, kv, tolVal, wp)) {
        DirPoint p(wp);
        p.keepVal = kv;
        p.elimVal = BigComplex(wp);
        p.dExactZero = true;
        pts.push_back(std::move(p));
        elimZeroAdded = true;
      }
    } else {
      // Certified c = 0 point over this (nonzero) d-root.
      if (hc.degree() >= 1 && relRootTest(hc, kv, tolVal, wp)) {
        DirPoint p(wp);
        p.keepVal = kv;
        p.elimVal = BigComplex(wp);
        pts.push_back(std::move(p));
        elimZeroAdded = true;
      }
    }
    // A numeric fiber root at (numerically) zero would duplicate the exact
    // point added above; the deflated slices normally strip it, and this
    // guard covers a trailing coefficient that sits just above the deflation
    // threshold.
    const BigFloat zeroDedup =
        BigFloat::pow2(-kDedupBits, wp) * max(BigFloat::fromLong(1, wp), kv.abs());

    if (fs.allZero && gs.allZero)
      throw std::runtime_error("affine_intersections: both slices vanish at a root (common component?)");

    if (fs.allZero || gs.allZero) {
      // One curve contains the whole fiber (a line component through this
      // root); certify that exactly, then read the points off the other
      // slice.
      const bool fIsLine = fs.allZero;
      const UniPoly content = bucketContent(fIsLine ? fb : gb);
      if (content.degree() < 1 || !relRootTest(content, kv, tolVal, wp))
        throw std::runtime_error(
            "affine_intersections: vanishing slice without a certified line component");
      const Slice& other = fIsLine ? gs : fs;
      if (other.hi - other.lo < 2) continue;
      std::vector<BigComplex> cs(other.full.begin() + static_cast<long>(other.lo),
                                 other.full.begin() + static_cast<long>(other.hi));
      const ComplexRootSet rs = roots_of_complex_poly(cs, precisionBits);
      for (size_t i = 0; i < rs.roots.size(); ++i) {
        const BigComplex& ev = rs.roots[i];
        if (elimZeroAdded && ev.abs() < zeroDedup) continue;
        const BigFloat scale = absEvalSlice(other.full, 0, other.full.size(), ev.abs(), wp);
        const BigFloat val = evalSlice(other.full, 0, other.full.size(), ev, wp).abs();
        if (!(val <= tolVal * scale)) continue;
        DirPoint p(wp);
        p.keepVal = kv;
        p.elimVal = ev;
        p.simple = rs.simpleRoots[i];
        p.rf = fIsLine ? BigFloat(wp) : val / max(scale, BigFloat::pow2(-wp, wp));
        p.rg = fIsLine ? val / max(scale, BigFloat::pow2(-wp, wp)) : BigFloat(wp);
        pts.push_back(std::move(p));
      }
      continue;
    }

    // Candidates come from the lower-degree deflated slice and must pass
    // residual validation against BOTH full slices.
    const bool genIsF = (fs.hi - fs.lo) <= (gs.hi - gs.lo);
    const Slice& gen = genIsF ? fs : gs;
    if (gen.hi - gen.lo < 2) continue;  // constant generator: no common fiber roots
    std::vector<BigComplex> cs(gen.full.begin() + static_cast<long>(gen.lo),
                               gen.full.begin() + static_cast<long>(gen.hi));
    const ComplexRootSet rs = roots_of_complex_poly(cs, precisionBits);
    for (size_t i = 0; i < rs.roots.size(); ++i) {
      const BigComplex& ev = rs.roots[i];
      if (elimZeroAdded && ev.abs() < zeroDedup) continue;
      const BigFloat az = ev.abs();
      const BigFloat fScale = absEvalSlice(fs.full, 0, fs.full.size(), az, wp);
      const BigFloat gScale = absEvalSlice(gs.full, 0, gs.full.size(), az, wp);
      const BigFloat fVal = evalSlice(fs.full, 0, fs.full.size(), ev, wp).abs();
      const BigFloat gVal = evalSlice(gs.full, 0, gs.full.size(), ev, wp).abs();
      if (!(fVal <= tolVal * fScale) || !(gVal <= tolVal * gScale)) continue;
      DirPoint p(wp);
      p.keepVal = kv;
      p.elimVal = ev;
      p.simple = rs.simpleRoots[i];
      const BigFloat floor = BigFloat::pow2(-wp, wp);
      p.rf = fVal / max(fScale, floor);
      p.rg = gVal / max(gScale, floor);
      pts.push_back(std::move(p));
    }
  }
  return pts;
}

BigFloat pointScale(const RootCluster& p, long wp) {
  BigFloat s = BigFloat::fromLong(1, wp);
  s = max(s, p.c.abs());
  s = max(s, p.d.abs());
  return s;
}

void checkSeparation(const std::vector<RootCluster>& pts, long precisionBits) {
  const long wp = precisionBits + 64;
  const BigFloat thr = BigFloat::pow2(-kDedupBits, wp);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      const BigFloat dist =
          max((pts[i].c - pts[j].c).abs(), (pts[i].d - pts[j].d).abs());
      if (dist < thr * pointScale(pts[i], wp))
        throw std::runtime_error(
            "affine_intersections: cluster ambiguity at the given precision");
    }
}

std::vector<RootCluster> assemblePoints(const std::vector<DirPoint>& dir, bool keepIsC,
                                        bool excludeDZero, long precisionBits) {
  const long wp = precisionBits + 64;
  std::vector<RootCluster> out;
  for (const DirPoint& p : dir) {
    if (excludeDZero && p.dExactZero) continue;
    RootCluster rc(wp);
    rc.c = keepIsC ? p.keepVal : p.elimVal;
    rc.d = keepIsC ? p.elimVal : p.keepVal;
    rc.residualFirst = p.rf;
    rc.residualSecond = p.rg;
    rc.simple = p.simple;
    rc.dExactlyZero = p.dExactZero;
    out.push_back(std::move(rc));
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    int t = mpfr_cmp(a.c.re.raw(), b.c.re.raw());
    if (t != 0) return t < 0;
    t = mpfr_cmp(a.c.im.raw(), b.c.im.raw());
    if (t != 0) return t < 0;
    t = mpfr_cmp(a.d.re.raw(), b.d.re.raw());
    if (t != 0) return t < 0;
    return mpfr_cmp(a.d.im.raw(), b.d.im.raw()) < 0;
  });
  return out;
}

}  // namespace

IntersectionResult affine_intersections(const SparsePoly& f, const SparsePoly& g,
                                        bool excludeDZero, long precisionBits) {
  requirePlaneCurve(f, "affine_intersections");
  requirePlaneCurve(g, "affine_intersections");
  if (precisionBits < 96) throw std::domain_error("affine_intersections: precision too low");

  const std::vector<DirPoint> viaD = runDirection(f, g, Var::d, Var::c, precisionBits);
  const std::vector<DirPoint> viaC = runDirection(f, g, Var::c, Var::d, precisionBits);

  std::vector<RootCluster> pts = assemblePoints(viaD, /*keepIsC=*/true, excludeDZero, precisionBits);
  const std::vector<RootCluster> cross =
      assemblePoints(viaC, /*keepIsC=*/false, excludeDZero, precisionBits);
  checkSeparation(pts, precisionBits);
  checkSeparation(cross, precisionBits);

  if (pts.size() != cross.size()) {
    std::ostringstream os;
    os << "affine_intersections: elimination-direction mismatch (" << pts.size() << " via Res_d, "
       << cross.size() << " via Res_c)";
    throw std::runtime_error(os.str());
  }

  IntersectionResult out;
  out.count = static_cast<long>(pts.size());
  out.points = std::move(pts);
  return out;
}

}  // namespace qrc
