#include "qrc/intersect/ledger.hpp"

#include <sstream>
#include <stdexcept>

#include "qrc/counts/degrees.hpp"
#include "qrc/exactcore/numtheory.hpp"
#include "qrc/polyengine/cyclotomic.hpp"
#include "qrc/polyengine/families.hpp"
#include "qrc/polyengine/unipoly.hpp"

namespace qrc {

namespace {

void requireCase(const CaseId& id) {
  if (id.kind == CaseId::Kind::IV) {
    if (!(3 <= id.a && id.a <= id.b))
      throw std::domain_error("bezout_ledger: IV cases need 3 <= n <= m");
  } else {
    if (!(id.a >= 3 && 1 <= id.b && id.b < id.a))
      throw std::domain_error("bezout_ledger: II cases need m >= 3 and 1 <= j < m");
  }
}

[[noreturn]] void inconsistent(const CaseId& id, const std::string& what) {
  throw std::runtime_error("bezout_ledger: " + case_name(id) + ": " + what);
}

// The degree-D form of the top-degree terms, encoded by c-exponent: the
// coefficient of t^i is the coefficient of c^i d^{D-i}.  Roots t0 of this
// encoding are the curve's points [t0 : 1 : 0] on the line at infinity;
// the vertex [0:1:0] lies on the curve iff t divides the encoding, and
// [1:0:0] lies on it iff the encoding's degree falls short of D.
UniPoly topFormEncoding(const SparsePoly& p) {
  const long D = p.totalDegree();
  std::vector<Int> v(static_cast<size_t>(D) + 1, Int(0));
  for (const auto& [e, coef] : p.terms()) {
    long total = 0;
    for (int i = 0; i < kVarCount; ++i) total += e[i];
    if (total == D) v[e[static_cast<int>(Var::c)]] = coef;
  }
  return UniPoly(std::move(v));
}

// No common points on the line at infinity, except (for II cases) the
// vertex [0:1:0], which is accounted by its own item.
void checkAtInfinity(const CaseId& id, const SparsePoly& A, const SparsePoly& B) {
  const UniPoly fa = topFormEncoding(A);
  const UniPoly fb = topFormEncoding(B);
  if (fa.degree() < A.totalDegree() && fb.degree() < B.totalDegree())
    inconsistent(id, "both curves pass through [1:0:0]");
  const UniPoly g = gcdPoly(fa, fb);
  const bool vertexAllowed = id.kind == CaseId::Kind::II;
  if (vertexAllowed) {
    if (g.degree() != g.order())
      inconsistent(id, "common point at infinity away from the vertex");
  } else {
    if (g.degree() != 0) inconsistent(id, "common point on the line at infinity");
  }
}

long phiHalf(long q) { return divExact(euler_phi(q), Int(2)).toLong(); }

struct CpqOrders {
  // exponent of the q-th boundary factor on each curve, keyed by q
  std::map<long, long> first, second;
};

CpqOrders exactProfiles(const CaseId& id, const SparsePoly& A, const SparsePoly& B, long gridMax) {
  const FactorProfile pa = factor_profile_on_line(A);
  const FactorProfile pb = factor_profile_on_line(B);
  for (const auto& [q, e] : pa.exponents)
    if (e > 0 && pb.exponents.count(q) && pb.exponents.at(q) > 0 && q > gridMax)
      inconsistent(id, "boundary factor q=" + std::to_string(q) + " outside the item grid");
  CpqOrders out;
  out.first.insert(pa.exponents.begin(), pa.exponents.end());
  out.second.insert(pb.exponents.begin(), pb.exponents.end());
  if (id.kind == CaseId::Kind::IV && pa.cPower > 0 && pb.cPower > 0)
    inconsistent(id, "unexpected common boundary point at c = 0");
  return out;
}

long orderOrZero(const std::map<long, long>& m, long q) {
  auto it = m.find(q);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

std::string case_name(const CaseId& id) {
  std::ostringstream os;
  os << (id.kind == CaseId::Kind::IV ? "IV(" : "II(") << id.a << "," << id.b << ")";
  return os.str();
}

const char* source_name(MultiplicitySource s) {
  return s == MultiplicitySource::ClosedForm ? "closed_form" : "exact_local";
}

std::pair<SparsePoly, SparsePoly> case_polys(const CaseId& id) {
  requireCase(id);
  if (id.kind == CaseId::Kind::IV)
    return {family_poly(FamilyId::P, id.a), family_poly(FamilyId::G, id.b)};
  return {family_poly(FamilyId::CPplus2dQ, id.b), family_poly(FamilyId::R, id.a - id.b)};
}

BezoutLedger bezout_ledger(const CaseId& id, Variant variant, MultiplicitySource source) {
  requireCase(id);
  BezoutLedger led;

  const bool iv = id.kind == CaseId::Kind::IV;
  const long n = id.a;             // IV: n,   II: m
  const long m = iv ? id.b : 0;    // IV only
  const long j = iv ? 0 : id.b;    // II only
  const long k = iv ? 0 : n - j;   // II only: the return-leg index

  led.degreeFirst = iv ? family_p_degree(n) : family_cp2dq_degree(j);
  led.degreeSecond = iv ? family_g_degree(m) : family_r_degree(k);
  led.product = led.degreeFirst * led.degreeSecond;

  const long gridMax = iv ? n : std::max(j, k);

  if (source == MultiplicitySource::ClosedForm) {
    if (!iv) {
      led.items.push_back({BoundaryLocation::Origin00, 0, 0, Int::pow2(static_cast<unsigned long>(n - j - 1)),
                           source});
      Int vertex(0);
      if (j % 2 != 0) vertex = divExact(Int::pow2(static_cast<unsigned long>(k)) - Int::minus1pow(k), Int(3));
      led.items.push_back({BoundaryLocation::VertexD, 0, 0, vertex, source});
    }
    for (long q = 3; q <= gridMax; ++q) {
      const Int mult = iv ? nu(q, n) * nu(q, m) : nu_prime(q, j, variant) * nu_prime(q, k, variant);
      const long pts = phiHalf(q);
      for (long p = 1; p <= pts; ++p)
        led.items.push_back({BoundaryLocation::Cpq, q, p, mult, source});
    }
  } else {
    const auto [A, B] = case_polys(id);
    const DegreeReport ra = degree_report(A);
    const DegreeReport rb = degree_report(B);
    if (!(Int(ra.totalDegree) == led.degreeFirst) || !(Int(rb.totalDegree) == led.degreeSecond))
      inconsistent(id, "polynomial degree disagrees with the closed form");
    checkAtInfinity(id, A, B);

    if (!iv) {
      // Origin: the first curve is smooth there with tangent line off d = 0;
      // the second has tangent cone a pure power of d.  The local number is
      // then the product of the two vanishing orders.
      if (ra.minTotalDegree != 1 || A.coeffOf(Exps{1, 0, 0, 0, 0, 0}).isZero())
        inconsistent(id, "first curve is not smooth at the origin with tangent off d = 0");
      if (!(rb.minFormSingleMonomial && rb.minFormVar == Var::d))
        inconsistent(id, "second curve's tangent cone at the origin is not a pure d power");
      led.items.push_back({BoundaryLocation::Origin00, 0, 0,
                           Int(ra.minTotalDegree) * Int(rb.minTotalDegree), source});

      // Vertex [0:1:0]: local order = total degree minus d-degree, provided
      // the top d-exponent is realized by the pure-d part (checked).
      const long dDegA = A.degreeIn(Var::d);
      const long dDegB = B.degreeIn(Var::d);
      // The d-degree must be realized on the pure-d part whenever one
      // exists (a curve with no pure-d monomial at all is fine: its top
      // d-exponent then sits on mixed terms and the order formula stands).
      if ((ra.pureDPartDegree >= 0 && ra.pureDPartDegree != dDegA) ||
          (rb.pureDPartDegree >= 0 && rb.pureDPartDegree != dDegB))
        inconsistent(id, "d-degree is not realized on the pure-d part");
      const long ordA = ra.totalDegree - dDegA;
      const long ordB = rb.totalDegree - dDegB;
      if (ordA != 0 && ordA != 1)
        inconsistent(id, "first curve's vertex order is neither 0 nor 1");
      led.items.push_back({BoundaryLocation::VertexD, 0, 0, Int(ordA) * Int(ordB), source});
    }

    const CpqOrders orders = exactProfiles(id, A, B, gridMax);
    for (long q = 3; q <= gridMax; ++q) {
      const Int mult = Int(orderOrZero(orders.first, q)) * Int(orderOrZero(orders.second, q));
      const long pts = phiHalf(q);
      for (long p = 1; p <= pts; ++p)
        led.items.push_back({BoundaryLocation::Cpq, q, p, mult, source});
    }
  }

  Int sum(0);
  for (const BoundaryItem& it : led.items) {
    if (it.multiplicity.sign() < 0) inconsistent(id, "negative boundary multiplicity");
    sum += it.multiplicity;
  }
  if (led.product < sum) inconsistent(id, "boundary multiplicities exceed the degree product");
  led.residual = led.product - sum;

  if (iv && source == MultiplicitySource::ClosedForm &&
      !(led.residual == curve_pair_residual(n, m)))
    throw std::logic_error("bezout_ledger: closed-form residual drifted from counts");
  return led;
}

}  // namespace qrc
