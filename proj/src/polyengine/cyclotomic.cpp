#include "qrc/polyengine/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "qrc/exactcore/numtheory.hpp"

namespace qrc {

UniPoly cyclotomic_poly(long q) {
  if (q <= 0) throw std::domain_error("cyclotomic_poly: q must be positive");
  UniPoly num = UniPoly::constant(Int(1));
  std::vector<UniPoly> dens;
  for (long d : divisors(q)) {
    int mu = moebius_mu(q / d);
    if (mu == 0) continue;
    // z^d - 1
    std::vector<Int> v(static_cast<size_t>(d) + 1, Int(0));
    v[0] = Int(-1);
    v[static_cast<size_t>(d)] = Int(1);
    UniPoly f{std::move(v)};
    if (mu == 1)
      num = num * f;
    else
      dens.push_back(std::move(f));
  }
  for (const UniPoly& f : dens) {
    auto quo = num.dividedExactly(f);
    if (!quo) throw std::logic_error("cyclotomic_poly: inexact division");
    num = *quo;
  }
  return num;
}

UniPoly psi_poly(long q) {
  if (q < 3) throw std::domain_error("psi_poly: q >= 3 required");
  UniPoly cyc = cyclotomic_poly(q);
  const long n = cyc.degree();
  if (n % 2 != 0) throw std::logic_error("psi_poly: odd cyclotomic degree");
  const long h = n / 2;
  for (long i = 0; i <= n; ++i)
    if (!(cyc.coeff(static_cast<size_t>(i)) == cyc.coeff(static_cast<size_t>(n - i))))
      throw std::logic_error("psi_poly: cyclotomic polynomial not palindromic");
  // z^{-h} Phi_q(z) = a_h + sum_{k>=1} a_{h+k} (z^k + z^{-k}) and
  // z^k + z^{-k} = V_k(z + 1/z) with V_0 = 2, V_1 = x, V_{k+1} = x V_k - V_{k-1}.
  UniPoly x = UniPoly::monomial(Int(1), 1);
  UniPoly vPrev = UniPoly::constant(Int(2));
  UniPoly vCur = x;
  UniPoly acc = UniPoly::constant(cyc.coeff(static_cast<size_t>(h)));
  for (long k = 1; k <= h; ++k) {
    acc = acc + vCur.scaled(cyc.coeff(static_cast<size_t>(h + k)));
    UniPoly vNext = x * vCur - vPrev;
    vPrev = std::move(vCur);
    vCur = std::move(vNext);
  }
  return acc;
}

UniPoly phi_tilde_uni(long q) {
  if (q < 3) throw std::domain_error("cpq_minimal_poly: q >= 3 required");
  static std::mutex mu;
  static std::map<long, UniPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
  }
  UniPoly psi = psi_poly(q);
  const long m = psi.degree();
  // c^m * psi(-2 - 1/c), assembled exactly: sum_k b_k (-2c-1)^k c^{m-k}.
  UniPoly lin(std::vector<Int>{Int(-1), Int(-2)});  // -1 - 2c
  UniPoly acc;
  UniPoly linPow = UniPoly::constant(Int(1));
  for (long k = 0; k <= m; ++k) {
    acc = acc + linPow.scaled(psi.coeff(static_cast<size_t>(k))).shiftedUp(static_cast<size_t>(m - k));
    if (k < m) linPow = linPow * lin;
  }
  UniPoly out = acc.primitivePart().withPositiveLeading();
  if (out.degree() != m) throw std::logic_error("cpq_minimal_poly: degree drop");
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(q, std::move(out)).first->second;
}

SparsePoly cpq_minimal_poly(long q) { return SparsePoly::fromUni(phi_tilde_uni(q), Var::c); }

namespace {

UniPoly restrictToLine(const SparsePoly& p, RestrictLine line) {
  Var killed = line == RestrictLine::DZero ? Var::d : (line == RestrictLine::BZero ? Var::b : Var::e);
  SparsePoly s = p.substituteZero(killed);
  if (s.isZero()) throw std::domain_error("restriction vanishes identically on the line");
  std::vector<Var> used = s.usedVars();
  if (used.size() <= 1) {
    Var v = used.empty() ? Var::c : used[0];
    return s.toUni(v);
  }
  // A homogeneous binary form in (c, d) — as after restricting a
  // homogenized curve to e = 0 — is read as a univariate polynomial in c
  // by evaluating at d = 1.
  if (used.size() == 2 && used[0] == Var::c && used[1] == Var::d &&
      s.totalDegree() == s.minTotalDegree()) {
    UniPoly out;
    for (const auto& [e, coeff] : s.terms())
      out = out + UniPoly::monomial(coeff, e[static_cast<int>(Var::c)]);
    return out;
  }
  throw std::domain_error("restriction is not univariate");
}

}  // namespace

long restrict_and_order(const SparsePoly& p, RestrictLine line, const PointRef& at) {
  UniPoly u = restrictToLine(p, line);
  if (std::holds_alternative<Rat>(at)) return u.orderAt(std::get<Rat>(at));
  const long q = std::get<CpqRef>(at).q;
  return u.exponentOf(phi_tilde_uni(q));
}

FactorProfile factor_profile_on_line(const SparsePoly& p) {
  UniPoly u = restrictToLine(p, RestrictLine::DZero);
  FactorProfile out;
  out.cPower = u.order();
  u = u.shiftedDown(static_cast<size_t>(out.cPower));
  const long qCap = 4 * u.degree() + 16;
  for (long q = 3; u.degree() > 0; ++q) {
    if (q > qCap)
      throw std::domain_error("factor_profile_on_line: non-unit cofactor (unexpected boundary point)");
    long e = 0;
    while (true) {
      auto quo = u.dividedExactly(phi_tilde_uni(q));
      if (!quo) break;
      u = *quo;
      ++e;
    }
    if (e > 0) out.exponents[q] = e;
  }
  out.unit = u.coeff(0);
  if (!(out.unit.abs() == Int(1)))
    throw std::domain_error("factor_profile_on_line: non-unit cofactor (unexpected boundary point)");
  return out;
}

}  // namespace qrc
