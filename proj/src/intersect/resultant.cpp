#include "qrc/intersect/resultant.hpp"

#include <stdexcept>
#include <vector>

namespace qrc {

namespace {

SparsePoly powSparse(const SparsePoly& base, long e) {
  SparsePoly acc = SparsePoly::constant(Int(1));
  SparsePoly b = base;
  long k = e;
  while (k > 0) {
    if (k & 1) acc = acc * b;
    b = b.square();
    k >>= 1;
  }
  return acc;
}

// Coefficients of p with respect to `elim`, each a univariate polynomial in
// `keep` (ascending in the elim-exponent).
std::vector<UniPoly> coefficientsIn(const SparsePoly& p, Var elim, Var keep) {
  std::vector<std::vector<Int>> raw(static_cast<size_t>(p.degreeIn(elim)) + 1);
  for (const auto& [e, coeff] : p.terms()) {
    auto& bucket = raw[e[static_cast<int>(elim)]];
    const size_t kExp = e[static_cast<int>(keep)];
    if (bucket.size() <= kExp) bucket.resize(kExp + 1, Int(0));
    bucket[kExp] += coeff;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

}  // namespace

SparsePoly resultant(const SparsePoly& f, const SparsePoly& g, Var eliminate) {
  if (f.isZero() || g.isZero()) throw std::domain_error("resultant: zero input");
  if (eliminate != Var::c && eliminate != Var::d)
    throw std::domain_error("resultant: only the plane variables c, d are supported");
  const Var keep = (eliminate == Var::c) ? Var::d : Var::c;
  for (const SparsePoly* p : {&f, &g})
    for (Var v : p->usedVars())
      if (v != Var::c && v != Var::d)
        throw std::domain_error("resultant: inputs must live in the (c, d) plane");

  const long df = f.degreeIn(eliminate);
  const long dg = g.degreeIn(eliminate);
  if (df == 0) return powSparse(f, dg);
  if (dg == 0) return powSparse(g, df);

  const std::vector<UniPoly> fc = coefficientsIn(f, eliminate, keep);
  const std::vector<UniPoly> gc = coefficientsIn(g, eliminate, keep);
  const UniPoly& lf = fc.back();
  const UniPoly& lg = gc.back();

  // deg of Res_elim(f, g) in the surviving variable is bounded by the mixed
  // bidegree expression; one extra sample pins down the polynomial exactly.
  const long bound = f.degreeIn(keep) * dg + g.degreeIn(keep) * df;
  std::vector<Int> nodes;
  std::vector<Int> values;
  nodes.reserve(static_cast<size_t>(bound) + 1);
  for (long step = 0; static_cast<long>(nodes.size()) <= bound; ++step) {
    // 0, 1, -1, 2, -2, ...
    const long t = (step == 0) ? 0 : (step % 2 == 1 ? (step + 1) / 2 : -(step / 2));
    const Int tv(t);
    if (lf.evalInt(tv).isZero() || lg.evalInt(tv).isZero()) continue;  // degree would drop
    std::vector<Int> fv, gv;
    fv.reserve(fc.size());
    gv.reserve(gc.size());
    for (const UniPoly& cPoly : fc) fv.push_back(cPoly.evalInt(tv));
    for (const UniPoly& cPoly : gc) gv.push_back(cPoly.evalInt(tv));
    values.push_back(resultantInt(UniPoly(fv), UniPoly(gv)));
    nodes.push_back(tv);
  }

  // Newton divided differences, exact over the rationals.
  const size_t n = nodes.size();
  std::vector<Rat> dd(values.begin(), values.end());
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rat(nodes[i] - nodes[i - k]);
      if (i == k) break;
    }
  // Expand the Newton form into monomial coefficients.
  std::vector<Rat> poly{dd[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    // poly <- poly * (x - x_i) + dd[i]
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rat(nodes[i]);
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  std::vector<Int> coeffs;
  coeffs.reserve(poly.size());
  for (const Rat& r : poly) {
    if (!r.isInteger())
      throw std::logic_error("resultant: interpolation produced a non-integer coefficient");
    coeffs.push_back(r.numerator());
  }
  UniPoly res{std::move(coeffs)};
  if (res.isZero())
    throw std::runtime_error("resultant: identically zero (inputs share a common component)");
  return SparsePoly::fromUni(res, keep);
}

}  // namespace qrc
