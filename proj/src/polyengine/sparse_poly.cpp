#include "qrc/polyengine/sparse_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qrc {

namespace {
constexpr const char* kVarNames[kVarCount] = {"c", "d", "e", "a", "b", "t"};

unsigned long termDegree(const Exps& e) {
  unsigned long s = 0;
  for (int i = 0; i < kVarCount; ++i) s += e[i];
  return s;
}
}  // namespace

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

SparsePoly SparsePoly::constant(const Int& v) {
  SparsePoly p;
  if (!v.isZero()) p.terms_.emplace(Exps{0, 0, 0, 0, 0, 0}, v);
  return p;
}

SparsePoly SparsePoly::variable(Var v) {
  SparsePoly p;
  Exps e{0, 0, 0, 0, 0, 0};
  e[static_cast<int>(v)] = 1;
  p.terms_.emplace(e, Int(1));
  return p;
}

SparsePoly SparsePoly::monomial(const Int& coeff, std::initializer_list<std::pair<Var, unsigned>> m) {
  SparsePoly p;
  if (coeff.isZero()) return p;
  Exps e{0, 0, 0, 0, 0, 0};
  for (const auto& [v, k] : m) e[static_cast<int>(v)] += k;
  p.terms_.emplace(e, coeff);
  return p;
}

long SparsePoly::totalDegree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(termDegree(terms_.rbegin()->first));
}

long SparsePoly::minTotalDegree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(termDegree(terms_.begin()->first));
}

long SparsePoly::degreeIn(Var v) const {
  if (terms_.empty()) return -1;
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[static_cast<int>(v)]);
  return static_cast<long>(best);
}

std::vector<Var> SparsePoly::usedVars() const {
  std::array<bool, kVarCount> used{};
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kVarCount; ++i)
      if (e[i] > 0) used[i] = true;
  std::vector<Var> out;
  for (int i = 0; i < kVarCount; ++i)
    if (used[i]) out.push_back(static_cast<Var>(i));
  return out;
}

Int SparsePoly::constantTerm() const { return coeffOf(Exps{0, 0, 0, 0, 0, 0}); }

Int SparsePoly::coeffOf(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

bool SparsePoly::allCoeffsPositive() const {
  if (terms_.empty()) return false;
  for (const auto& [e, c] : terms_)
    if (c.sign() <= 0) return false;
  return true;
}

void SparsePoly::addTerm(const Exps& e, const Int& v) {
  if (v.isZero()) return;
  auto [it, inserted] = terms_.emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second.isZero()) terms_.erase(it);
  }
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out = a;
  for (const auto& [e, c] : b.terms_) out.addTerm(e, c);
  return out;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out = a;
  for (const auto& [e, c] : b.terms_) out.addTerm(e, -c);
  return out;
}

SparsePoly operator-(const SparsePoly& a) {
  SparsePoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

SparsePoly SparsePoly::scaled(const Int& k) const {
  SparsePoly out;
  if (k.isZero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
  return out;
}

namespace {

// Kronecker route for products in at most two variables: pack exponents
// (i, j) -> i + j*stride into the dense univariate layer, multiply there,
// and unpack.
SparsePoly kroneckerTwoVar(const SparsePoly& a, const SparsePoly& b, Var x, std::optional<Var> y) {
  const int xi = static_cast<int>(x);
  const int yi = y ? static_cast<int>(*y) : -1;
  const unsigned long strideX = static_cast<unsigned long>(a.degreeIn(x) + b.degreeIn(x)) + 1;
  auto pack = [&](const SparsePoly& p) {
    unsigned long len = 0;
    for (const auto& [e, c] : p.terms()) {
      unsigned long idx = e[xi] + (yi >= 0 ? static_cast<unsigned long>(e[yi]) * strideX : 0);
      len = std::max(len, idx + 1);
    }
    std::vector<Int> dense(len, Int(0));
    for (const auto& [e, c] : p.terms()) {
      unsigned long idx = e[xi] + (yi >= 0 ? static_cast<unsigned long>(e[yi]) * strideX : 0);
      dense[idx] = c;
    }
    return UniPoly(std::move(dense));
  };
  UniPoly prod = pack(a) * pack(b);
  SparsePoly out;
  for (size_t i = 0; i < static_cast<size_t>(prod.degree() + 1); ++i) {
    const Int& c = prod.coeff(i);
    if (c.isZero()) continue;
    Exps e{0, 0, 0, 0, 0, 0};
    e[xi] = static_cast<unsigned>(i % strideX);
    if (yi >= 0) e[yi] = static_cast<unsigned>(i / strideX);
    out.addTerm(e, c);
  }
  return out;
}

}  // namespace

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.isZero() || b.isZero()) return SparsePoly();
  if (a.termCount() * b.termCount() > 4096) {
    std::array<bool, kVarCount> used{};
    for (const SparsePoly* p : {&a, &b})
      for (Var v : p->usedVars()) used[static_cast<int>(v)] = true;
    std::vector<Var> vars;
    for (int i = 0; i < kVarCount; ++i)
      if (used[i]) vars.push_back(static_cast<Var>(i));
    if (vars.size() == 1) return kroneckerTwoVar(a, b, vars[0], std::nullopt);
    if (vars.size() == 2) return kroneckerTwoVar(a, b, vars[0], vars[1]);
  }
  SparsePoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exps e;
      for (int i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
      out.addTerm(e, ca * cb);
    }
  return out;
}

SparsePoly SparsePoly::substituteZero(Var v) const {
  SparsePoly out;
  const int vi = static_cast<int>(v);
  for (const auto& [e, c] : terms_)
    if (e[vi] == 0) out.terms_.emplace(e, c);
  return out;
}

SparsePoly SparsePoly::derivative(Var v) const {
  SparsePoly out;
  const int vi = static_cast<int>(v);
  for (const auto& [e, c] : terms_) {
    if (e[vi] == 0) continue;
    Exps e2 = e;
    e2[vi] -= 1;
    out.addTerm(e2, c * Int(static_cast<long>(e[vi])));
  }
  return out;
}

UniPoly SparsePoly::toUni(Var v) const {
  const int vi = static_cast<int>(v);
  size_t len = 0;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < kVarCount; ++i)
      if (i != vi && e[i] != 0)
        throw std::domain_error(std::string("toUni: polynomial involves ") + kVarNames[i]);
    len = std::max(len, static_cast<size_t>(e[vi]) + 1);
  }
  std::vector<Int> dense(len, Int(0));
  for (const auto& [e, c] : terms_) dense[e[vi]] = c;
  return UniPoly(std::move(dense));
}

SparsePoly SparsePoly::fromUni(const UniPoly& p, Var v) {
  SparsePoly out;
  const int vi = static_cast<int>(v);
  for (size_t i = 0; i <= static_cast<size_t>(std::max<long>(p.degree(), 0)); ++i) {
    if (p.isZero()) break;
    const Int& c = p.coeff(i);
    if (c.isZero()) continue;
    Exps e{0, 0, 0, 0, 0, 0};
    e[vi] = static_cast<unsigned>(i);
    out.terms_.emplace(e, c);
  }
  return out;
}

SparsePoly SparsePoly::homogenized(Var hv, long target) const {
  if (isZero()) return SparsePoly();
  if (degreeIn(hv) > 0) throw std::domain_error("homogenized: homogenizing variable already present");
  const long deg = totalDegree();
  if (target < 0) target = deg;
  if (target < deg) throw std::domain_error("homogenized: target below total degree");
  SparsePoly out;
  const int hi = static_cast<int>(hv);
  for (const auto& [e, c] : terms_) {
    Exps e2 = e;
    e2[hi] = static_cast<unsigned>(target - static_cast<long>(termDegree(e)));
    out.terms_.emplace(e2, c);
  }
  return out;
}

Int SparsePoly::content() const {
  Int g(0);
  for (const auto& [e, c] : terms_) g = gcd(g, c);
  return g.abs();
}

SparsePoly SparsePoly::primitivePart() const {
  if (isZero()) return SparsePoly();
  Int g = content();
  SparsePoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, divExact(c, g));
  return out;
}

SparsePoly SparsePoly::normalizedUnit() const {
  if (isZero()) return SparsePoly();
  SparsePoly p = primitivePart();
  if (p.terms_.rbegin()->second.sign() < 0) p = -p;
  return p;
}

DegreeReport degree_report(const SparsePoly& p) {
  if (p.isZero()) throw std::domain_error("degree_report: zero polynomial");
  DegreeReport r;
  r.totalDegree = p.totalDegree();
  r.minTotalDegree = p.minTotalDegree();
  for (Var v : p.usedVars()) r.varDegrees.emplace_back(v, p.degreeIn(v));

  SparsePoly pureD = p;
  for (Var v : p.usedVars())
    if (v != Var::d) pureD = pureD.substituteZero(v);
  r.pureDPartDegree = pureD.isZero() ? -1 : pureD.degreeIn(Var::d);

  // Minimal-degree homogeneous form.
  const unsigned long m = static_cast<unsigned long>(r.minTotalDegree);
  std::vector<const Exps*> minTerms;
  for (const auto& [e, c] : p.terms()) {
    unsigned long s = 0;
    for (int i = 0; i < kVarCount; ++i) s += e[i];
    if (s == m) minTerms.push_back(&e);
    if (s > m && !minTerms.empty()) break;
  }
  r.minFormSingleMonomial = (minTerms.size() == 1);
  if (r.minFormSingleMonomial) {
    int nz = 0, which = -1;
    for (int i = 0; i < kVarCount; ++i)
      if ((*minTerms[0])[i] > 0) {
        ++nz;
        which = i;
      }
    if (nz == 1) r.minFormVar = static_cast<Var>(which);
  }
  return r;
}

std::string SparsePoly::dumpJson() const {
  std::vector<Var> vars = usedVars();
  std::ostringstream os;
  os << "{\"vars\":[";
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) os << ",";
    os << "\"" << var_name(vars[i]) << "\"";
  }
  os << "],\"terms\":[";
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << ",";
    first = false;
    os << "[";
    for (Var v : vars) os << it->first[static_cast<int>(v)] << ",";
    os << "\"" << it->second.toString() << "\"]";
  }
  os << "]}";
  return os.str();
}

std::string SparsePoly::toString() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0)
      os << "-";
    first = false;
    Int ac = c.abs();
    bool printedCoeff = false;
    const bool isConstTerm = termDegree(it->first) == 0;
    if (!(ac == Int(1)) || isConstTerm) {
      os << ac.toString();
      printedCoeff = true;
    }
    for (int i = 0; i < kVarCount; ++i) {
      unsigned k = it->first[i];
      if (k == 0) continue;
      if (printedCoeff) os << "*";
      os << kVarNames[i];
      if (k > 1) os << "^" << k;
      printedCoeff = true;
    }
  }
  return os.str();
}

}  // namespace qrc
