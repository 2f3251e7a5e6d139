#include "qrc/polyengine/families.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "qrc/polyengine/cyclotomic.hpp"

namespace qrc {

namespace {

constexpr const char* kFamilyNames[] = {"P",  "Q",  "R",  "S",       "G",       "CPplus2dQ",
                                        "T",  "U",  "T0", "U0",      "R1",      "S1",
                                        "LrCubic", "Y1Cubic", "CpqMinimal", "GleasonOrbit"};

long g_budget = 12;
std::mutex g_mutex;
std::map<std::pair<int, long>, SparsePoly> g_cache;

SparsePoly varC() { return SparsePoly::variable(Var::c); }
SparsePoly varD() { return SparsePoly::variable(Var::d); }
SparsePoly varA() { return SparsePoly::variable(Var::a); }
SparsePoly varB() { return SparsePoly::variable(Var::b); }
SparsePoly one() { return SparsePoly::constant(Int(1)); }

SparsePoly cached(FamilyId f, long index);

// Orbit pair (P_n, Q_n): internal seeds P_1 = 1, Q_1 = 0 reproduce the
// displayed values P_3 = 1+c+d, Q_3 = 1 and extend the family down to the
// j = 1, 2 curves c and c+2d needed by the intersection ledgers.
void buildPq(long n, SparsePoly& p, SparsePoly& q) {
  p = one();
  q = SparsePoly();
  for (long i = 1; i < n; ++i) {
    SparsePoly p2 = p.square();
    SparsePoly next = p2 + varC() * p * q + varD() * q.square();
    q = std::move(p2);
    p = std::move(next);
  }
}

void buildRs(long k, SparsePoly& r, SparsePoly& s) {
  r = varD().scaled(Int(4)) - varC().square();
  s = varD().scaled(Int(4));
  for (long i = 1; i < k; ++i) {
    SparsePoly r2 = r.square();
    SparsePoly next = r2 + varC() * r * s + varD() * s.square();
    s = std::move(r2);
    r = std::move(next);
  }
}

void buildTu(long m, SparsePoly& tp, SparsePoly& up) {
  tp = varA();
  up = varB() - one();
  for (long i = 1; i < m; ++i) {
    SparsePoly u2 = up.square();
    SparsePoly nextT = varA() * u2;
    SparsePoly nextU = tp.square() + (tp * up).scaled(Int(2)) + varB() * u2;
    tp = std::move(nextT);
    up = std::move(nextU);
  }
}

// Reduced critical-orbit recursion (univariate in a), exactly as displayed:
// odd step multiplies by a, even step divides by a exactly.
void buildT0u0(long m, UniPoly& t0, UniPoly& u0) {
  UniPoly a = UniPoly::monomial(Int(1), 1);
  t0 = a;                                      // T0_1 = a
  u0 = UniPoly::constant(Int(-1));             // U0_1 = -1
  if (m == 1) return;
  UniPoly t = UniPoly::constant(Int(1));       // T0_2 = 1
  UniPoly u = UniPoly(std::vector<Int>{Int(-2), Int(1)});  // U0_2 = a-2
  long level = 2;
  while (level < m) {
    if (level % 2 == 0) {  // produce level 2k+1 from 2k
      UniPoly nt = (u.square()).shiftedUp(1);        // a * (U0_{2k})^2
      UniPoly nu = t * (t + u.scaled(Int(2)));       // T0_{2k} (T0_{2k} + 2 U0_{2k})
      t = std::move(nt);
      u = std::move(nu);
    } else {  // produce level 2k+2 from 2k+1
      UniPoly nt = u.square();                       // (U0_{2k+1})^2
      UniPoly nu = (t * (t + u.scaled(Int(2)))).shiftedDown(1);  // exact /a
      t = std::move(nt);
      u = std::move(nu);
    }
    ++level;
  }
  t0 = std::move(t);
  u0 = std::move(u);
}

void buildR1s1(long k, UniPoly& r1, UniPoly& s1) {
  r1 = UniPoly::monomial(Int(4), 1);  // 4d
  s1 = r1;
  for (long i = 1; i < k; ++i) {
    UniPoly r2 = r1.square();
    UniPoly next = r2 + (s1.square()).shiftedUp(1);
    s1 = std::move(r2);
    r1 = std::move(next);
  }
}

UniPoly gleasonOrbit(long j) {
  // q_c iterated on c: g_1 = c^2 + c, g_{k+1} = g_k^2 + c.
  UniPoly c = UniPoly::monomial(Int(1), 1);
  UniPoly g = c;  // g_0 = c
  UniPoly prev;
  for (long k = 0; k <= j; ++k) {
    prev = g;
    g = g.square() + c;
  }
  return g - prev;  // g_{j+1} - g_j
}

SparsePoly build(FamilyId f, long index) {
  switch (f) {
    case FamilyId::P:
    case FamilyId::Q: {
      SparsePoly p, q;
      buildPq(index, p, q);
      return f == FamilyId::P ? p : q;
    }
    case FamilyId::R:
    case FamilyId::S: {
      SparsePoly r, s;
      buildRs(index, r, s);
      return f == FamilyId::R ? r : s;
    }
    case FamilyId::G:
      return varC() * cached(FamilyId::R, index) + varD().scaled(Int(2)) * cached(FamilyId::S, index);
    case FamilyId::CPplus2dQ:
      return varC() * cached(FamilyId::P, index) + varD().scaled(Int(2)) * cached(FamilyId::Q, index);
    case FamilyId::T:
    case FamilyId::U: {
      SparsePoly t, u;
      buildTu(index, t, u);
      return f == FamilyId::T ? t : u;
    }
    case FamilyId::T0:
    case FamilyId::U0: {
      UniPoly t0, u0;
      buildT0u0(index, t0, u0);
      return SparsePoly::fromUni(f == FamilyId::T0 ? t0 : u0, Var::a);
    }
    case FamilyId::R1:
    case FamilyId::S1: {
      UniPoly r1, s1;
      buildR1s1(index, r1, s1);
      return SparsePoly::fromUni(f == FamilyId::R1 ? r1 : s1, Var::d);
    }
    case FamilyId::Y1Cubic: {
      // The degree-3 curve of the first satellite family, affine chart e=1.
      SparsePoly y = SparsePoly::monomial(Int(1), {{Var::c, 3}}) -
                     SparsePoly::monomial(Int(4), {{Var::c, 1}, {Var::d, 1}}) -
                     SparsePoly::monomial(Int(8), {{Var::d, 2}});
      return y;
    }
    case FamilyId::CpqMinimal:
      return cpq_minimal_poly(index);
    case FamilyId::GleasonOrbit:
      return SparsePoly::fromUni(gleasonOrbit(index), Var::c);
    default:
      throw std::domain_error("family_poly: unknown family");
  }
}

SparsePoly cached(FamilyId f, long index) {
  const auto key = std::make_pair(static_cast<int>(f), index);
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  SparsePoly value = build(f, index);
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

const char* family_name(FamilyId f) { return kFamilyNames[static_cast<int>(f)]; }

std::optional<FamilyId> family_from_name(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(FamilyId::GleasonOrbit); ++i)
    if (name == kFamilyNames[i]) return static_cast<FamilyId>(i);
  return std::nullopt;
}

long family_budget() { return g_budget; }

void set_family_budget(long budget) {
  if (budget < 1) throw std::domain_error("set_family_budget: budget must be positive");
  g_budget = budget;
}

long family_budget_for(FamilyId f) {
  if (f == FamilyId::T0 || f == FamilyId::U0) return g_budget + 4;
  if (f == FamilyId::CpqMinimal) return 1000;  // degree phi(q)/2 stays tiny
  return g_budget;
}

SparsePoly family_poly(FamilyId family, long index, const std::optional<Rat>& r) {
  if (family == FamilyId::LrCubic) {
    if (!r) throw std::domain_error("family_poly: LrCubic requires the rational parameter r");
    if (index != 1) throw std::domain_error("family_poly: LrCubic uses index 1");
    return lr_cubic(*r);
  }
  if (r) throw std::domain_error("family_poly: parameter r is only for LrCubic");
  const long lo = (family == FamilyId::CpqMinimal) ? 3
                  : (family == FamilyId::GleasonOrbit) ? 0
                                                       : 1;
  if (index < lo) throw std::domain_error("family_poly: index below the family's first member");
  if (family == FamilyId::Y1Cubic && index != 1)
    throw std::domain_error("family_poly: Y1Cubic uses index 1");
  if (index > family_budget_for(family))
    throw std::domain_error("family_poly: index exceeds configured budget");
  return cached(family, index);
}

SparsePoly homogenize(const SparsePoly& p, long targetDegree) {
  return p.homogenized(Var::e, targetDegree);
}

SparsePoly lr_cubic(const Rat& r) {
  if (!(Rat(0) < r && r < Rat(1)))
    throw std::domain_error("lr_cubic: parameter must satisfy 0 < r < 1");
  // Locus of maps with an attracting fixed point of multiplier r, eliminated
  // to a plane cubic in (c, d).  With w = 2 + r the expanded coefficients are
  //   c^3 : -(w^3 + 2rw + r^2) / w^3        c^2 : 4r(1 - 2w) / w^3
  //   c   : -16 r^2 (1 + r) / w^5           d^2 : 4
  //   cd  : 4(w + 3r) / w^2                 d   : 16 r / w^3
  const Rat w = Rat(2) + r;
  const Rat w2 = w * w;
  const Rat w3 = w2 * w;
  const Rat w5 = w3 * w2;
  struct Term {
    unsigned ec, ed;
    Rat coeff;
  };
  const Term terms[] = {
      {3, 0, -(w3 + Rat(2) * r * w + r * r) / w3},
      {2, 0, Rat(4) * r * (Rat(1) - Rat(2) * w) / w3},
      {1, 0, -(Rat(16) * r * r * (Rat(1) + r)) / w5},
      {0, 2, Rat(4)},
      {1, 1, Rat(4) * (w + Rat(3) * r) / w2},
      {0, 1, Rat(16) * r / w3},
  };
  Int lcm(1);
  for (const Term& t : terms) {
    const Int den = t.coeff.denominator();
    lcm = divExact(lcm * den, gcd(lcm, den));
  }
  SparsePoly out;
  for (const Term& t : terms) {
    const Rat scaled = t.coeff * Rat(lcm);
    if (!scaled.isInteger()) throw std::logic_error("lr_cubic: denominator clearing failed");
    if (scaled == Rat(0)) continue;
    out = out + SparsePoly::monomial(scaled.numerator(), {{Var::c, t.ec}, {Var::d, t.ed}});
  }
  out = out.primitivePart();
  // "The only term of degree three is c^3": guard the structure the
  // intersection accounting relies on.
  if (out.totalDegree() != 3 || !out.constantTerm().isZero())
    throw std::logic_error("lr_cubic: unexpected shape");
  for (const auto& [e, coeff] : out.terms()) {
    if (e[0] + e[1] == 3 && e[static_cast<int>(Var::c)] != 3)
      throw std::logic_error("lr_cubic: extra degree-three term");
  }
  if (out.coeffOf(Exps{1, 0, 0, 0, 0, 0}).isZero() ||
      out.coeffOf(Exps{0, 1, 0, 0, 0, 0}).isZero())
    throw std::logic_error("lr_cubic: missing linear term");
  return out;
}

std::pair<UniPoly, UniPoly> t0_u0_from_b0(long m) {
  if (m < 1) throw std::domain_error("t0_u0_from_b0: m >= 1 required");
  // T/U recursion with b set to zero before any expansion.
  UniPoly t = UniPoly::monomial(Int(1), 1);   // a
  UniPoly u = UniPoly::constant(Int(-1));     // b - 1 at b = 0
  for (long i = 1; i < m; ++i) {
    UniPoly nt = (u.square()).shiftedUp(1);
    UniPoly nu = t.square() + (t * u).scaled(Int(2));
    t = std::move(nt);
    u = std::move(nu);
  }
  const long k = std::min(t.order(), u.order());
  return {t.shiftedDown(static_cast<size_t>(k)), u.shiftedDown(static_cast<size_t>(k))};
}

}  // namespace qrc
