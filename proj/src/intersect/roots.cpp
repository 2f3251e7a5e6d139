#include "qrc/intersect/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qrc {

namespace {

BigComplex evalPoly(const std::vector<BigComplex>& a, const BigComplex& z) {
  BigComplex acc(z.re.precision());
  for (size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
  return acc;
}

// Sum of |a_i| |z|^i: the scale against which residuals at z are judged.
BigFloat evalAbsScale(const std::vector<BigComplex>& a, const BigFloat& zAbs) {
  BigFloat acc(zAbs.precision());
  for (size_t i = a.size(); i-- > 0;) acc = acc * zAbs + a[i].abs();
  return acc;
}

std::vector<BigComplex> derivativeOf(const std::vector<BigComplex>& a, long prec) {
  std::vector<BigComplex> d;
  if (a.size() <= 1) return d;
  d.reserve(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d.push_back(BigFloat::fromLong(static_cast<long>(i), prec) * a[i]);
  return d;
}

bool lexLess(const BigComplex& x, const BigComplex& y) {
  const int c = mpfr_cmp(x.re.raw(), y.re.raw());
  if (c != 0) return c < 0;
  return mpfr_cmp(x.im.raw(), y.im.raw()) < 0;
}

}  // namespace

ComplexRootSet roots_of_complex_poly(const std::vector<BigComplex>& coeffs, long precisionBits,
                                     long workPrecisionBits) {
  const long wp = workPrecisionBits > 0 ? workPrecisionBits : precisionBits + 64;
  ComplexRootSet out;
  if (coeffs.size() <= 1) return out;
  if (coeffs.back().isZero())
    throw std::domain_error("roots_of_complex_poly: zero leading coefficient");

  // Exactly-zero trailing coefficients give exact roots at the origin; strip
  // them so the iteration runs on a polynomial with nonzero constant term.
  size_t zeroOrder = 0;
  while (zeroOrder < coeffs.size() - 1 && coeffs[zeroOrder].isZero()) ++zeroOrder;
  const std::vector<BigComplex> a(coeffs.begin() + static_cast<long>(zeroOrder), coeffs.end());
  const size_t n = a.size() - 1;
  std::vector<BigComplex> z;
  std::vector<bool> frozen;
  const BigFloat one = BigFloat::fromLong(1, wp);

  if (n > 0) {
    const std::vector<BigComplex> ad = derivativeOf(a, wp);

    // Initial configuration on the Newton-polygon circles: the upper convex
    // hull of (i, log2|a_i|) groups the roots by expected modulus, which
    // keeps the start close even when coefficient sizes are very lopsided.
    std::vector<std::pair<double, double>> pts;  // (index, log2 |a_i|)
    for (size_t i = 0; i <= n; ++i)
      if (!a[i].isZero())
        pts.emplace_back(static_cast<double>(i),
                         static_cast<double>(mpfr_get_exp(a[i].abs().raw())));
    std::vector<std::pair<double, double>> hull;
    for (const auto& p : pts) {
      while (hull.size() >= 2) {
        const auto& o = hull[hull.size() - 2];
        const auto& q = hull[hull.size() - 1];
        const double cross =
            (q.first - o.first) * (p.second - o.second) - (q.second - o.second) * (p.first - o.first);
        if (cross >= 0)
          hull.pop_back();
        else
          break;
      }
      hull.push_back(p);
    }

    BigFloat pi(wp);
    mpfr_const_pi(pi.raw(), MPFR_RNDN);
    z.reserve(n);
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
      const double k1 = hull[e].first, e1 = hull[e].second;
      const double k2 = hull[e + 1].first, e2 = hull[e + 1].second;
      const long m = static_cast<long>(k2 - k1 + 0.5);
      BigFloat r(wp);
      mpfr_set_d(r.raw(), (e1 - e2) / static_cast<double>(m), MPFR_RNDN);
      mpfr_exp2(r.raw(), r.raw(), MPFR_RNDN);
      for (long j = 0; j < m; ++j) {
        BigFloat angle = (BigFloat::fromLong(2, wp) * pi *
                          (BigFloat::fromLong(j, wp) + BigFloat::fromRat(Rat(37, 100), wp))) /
                             BigFloat::fromLong(m, wp) +
                         BigFloat::fromRat(Rat(7, 10), wp) * BigFloat::fromLong(static_cast<long>(k1), wp);
        BigFloat c(wp), s(wp);
        mpfr_cos(c.raw(), angle.raw(), MPFR_RNDN);
        mpfr_sin(s.raw(), angle.raw(), MPFR_RNDN);
        z.emplace_back(r * c, r * s);
      }
    }

    const BigFloat stopTol = BigFloat::pow2(-(precisionBits - 8), wp);
    // Evaluation noise floor: once |p(z)| is below the rounding error of the
    // Horner evaluation itself, the approximation cannot improve at this
    // working precision and the root is accepted.
    const BigFloat noiseFac =
        BigFloat::pow2(-wp, wp) * BigFloat::fromLong(4 * static_cast<long>(n) + 4, wp);
    const int cap = 600;
    frozen.assign(n, false);
    bool converged = false;
    for (int iter = 0; iter < cap && !converged; ++iter) {
      converged = true;
      for (size_t i = 0; i < n; ++i) {
        if (frozen[i]) continue;
        const BigComplex p = evalPoly(a, z[i]);
        if (p.isZero() || p.abs() <= noiseFac * evalAbsScale(a, z[i].abs())) {
          frozen[i] = true;
          continue;
        }
        const BigComplex pd = evalPoly(ad, z[i]);
        BigComplex w(wp);
        if (pd.isZero()) {
          // Landed on a critical point: nudge deterministically.
          w = BigComplex(BigFloat::pow2(-8, wp), BigFloat::pow2(-9, wp));
        } else {
          const BigComplex newton = p / pd;
          BigComplex sum(wp);
          for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const BigComplex diff = z[i] - z[j];
            if (diff.isZero()) continue;
            sum = sum + BigComplex(one, BigFloat(wp)) / diff;
          }
          const BigComplex den = BigComplex(one, BigFloat(wp)) - newton * sum;
          w = den.isZero() ? newton : newton / den;
        }
        z[i] = z[i] - w;
        if (w.abs() / max(one, z[i].abs()) < stopTol)
          frozen[i] = true;
        else
          converged = false;
      }
    }
    if (!converged) {
      std::string msg = "roots_of_complex_poly: no convergence for degree " +
                        std::to_string(n) + " at " + std::to_string(precisionBits) + " bits";
      if (const char* dbg = std::getenv("QRC_ROOTS_DEBUG"); dbg && *dbg == '1') {
        msg += "\ncoeff exponents:";
        for (size_t i = 0; i <= n; ++i)
          msg += " " + std::to_string(a[i].isZero() ? -999999L
                                                    : static_cast<long>(mpfr_get_exp(a[i].abs().raw())));
        msg += "\nunfrozen:";
        for (size_t i = 0; i < n; ++i)
          if (!frozen[i])
            msg += " [" + std::to_string(i) + "] z=(" + std::to_string(z[i].re.toDouble()) + "," +
                   std::to_string(z[i].im.toDouble()) + ")";
      }
      throw std::runtime_error(msg);
    }
  }

  // Per-root Newton polish; a root is flagged simple when the derivative is
  // well away from zero on the residual scale there.  The polish pass also
  // produces the a-posteriori error bound (evaluation noise plus residual,
  // divided by the derivative) that drives precision retries in callers
  // holding exact coefficients.
  out.simpleRoots.assign(n, true);
  const BigFloat simpleTol = BigFloat::pow2(-(precisionBits / 4), wp);
  const std::vector<BigComplex> ad = derivativeOf(a, wp);
  long worstDeficit = 0;
  for (size_t i = 0; i < n; ++i) {
    for (int it = 0; it < 4; ++it) {
      const BigComplex p = evalPoly(a, z[i]);
      if (p.isZero()) break;
      const BigComplex pd = evalPoly(ad, z[i]);
      if (pd.isZero()) break;
      z[i] = z[i] - p / pd;
    }
    const BigFloat pdAbs = evalPoly(ad, z[i]).abs();
    const BigFloat pdScale = evalAbsScale(ad, z[i].abs());
    if (!(simpleTol * pdScale < pdAbs)) out.simpleRoots[i] = false;

    const BigFloat scale = evalAbsScale(a, z[i].abs());
    const BigFloat errAbs =
        BigFloat::pow2(-wp, wp) * BigFloat::fromLong(static_cast<long>(n) + 1, wp) * scale +
        evalPoly(a, z[i]).abs();
    if (pdAbs.isZero()) {
      worstDeficit = std::max(worstDeficit, precisionBits);
    } else {
      const BigFloat rel = errAbs / (pdAbs * max(one, z[i].abs()));
      if (!rel.isZero()) {
        const long deficit = static_cast<long>(mpfr_get_exp(rel.raw())) + (precisionBits - 8);
        worstDeficit = std::max(worstDeficit, deficit);
      }
    }
  }
  out.deficitBits = std::min(worstDeficit, 1L << 16);

  // Stripped origin roots re-enter as exact zeros; they are simple only when
  // the origin is a first-order root of the input.
  for (size_t k = 0; k < zeroOrder; ++k) {
    z.emplace_back(BigFloat(wp), BigFloat(wp));
    out.simpleRoots.push_back(zeroOrder == 1);
  }

  // Canonical order.
  const size_t total = z.size();
  std::vector<size_t> idx(total);
  for (size_t i = 0; i < total; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return lexLess(z[x], z[y]); });
  out.roots.reserve(total);
  std::vector<bool> flags;
  flags.reserve(total);
  for (size_t i : idx) {
    out.roots.push_back(z[i]);
    flags.push_back(out.simpleRoots[i]);
  }
  out.simpleRoots = std::move(flags);
  return out;
}

std::vector<BigComplex> complex_roots(const UniPoly& p, long precisionBits) {
  if (p.isZero()) throw std::domain_error("complex_roots: zero polynomial");
  const UniPoly sf = p.squarefreePart();
  long work = precisionBits + 64;
  for (int attempt = 0;; ++attempt) {
    std::vector<BigComplex> coeffs;
    coeffs.reserve(static_cast<size_t>(sf.degree()) + 1);
    for (long i = 0; i <= sf.degree(); ++i)
      coeffs.emplace_back(BigFloat::fromInt(sf.coeff(static_cast<size_t>(i)), work), BigFloat(work));
    ComplexRootSet rs = roots_of_complex_poly(coeffs, precisionBits, work);
    if (rs.deficitBits <= 0) return std::move(rs.roots);
    if (attempt == 3)
      throw std::runtime_error("complex_roots: accuracy target unreachable for degree " +
                               std::to_string(sf.degree()) + " at " + std::to_string(work) +
                               " working bits");
    work += rs.deficitBits + 64;
  }
}

}  // namespace qrc
