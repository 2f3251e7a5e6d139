#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrc/counts/counts.hpp"
#include "qrc/counts/degrees.hpp"
#include "qrc/intersect/adjudicate.hpp"
#include "qrc/intersect/golden.hpp"
#include "qrc/intersect/intersections.hpp"
#include "qrc/intersect/ledger.hpp"
#include "qrc/intersect/resultant.hpp"
#include "qrc/intersect/roots.hpp"
#include "qrc/polyengine/families.hpp"
#include "qrc/polyengine/sparse_poly.hpp"
#include "qrc/polyengine/unipoly.hpp"

using qrc::BoundaryItem;
using qrc::BoundaryLocation;
using qrc::CaseId;
using qrc::FamilyId;
using qrc::Int;
using qrc::MultiplicitySource;
using qrc::Rat;
using qrc::SparsePoly;
using qrc::UniPoly;
using qrc::Var;
using qrc::Variant;
using qrc::Verdict;

namespace {
constexpr Variant kPD = Variant::PaperDisplay;
constexpr Variant kMR = Variant::MarkovRecurrence;
constexpr MultiplicitySource kCF = MultiplicitySource::ClosedForm;
constexpr MultiplicitySource kEL = MultiplicitySource::ExactLocal;

SparsePoly fam(FamilyId id, long n) { return qrc::family_poly(id, n); }

Int itemSum(const qrc::BezoutLedger& led) {
  Int s(0);
  for (const BoundaryItem& it : led.items) s += it.multiplicity;
  return s;
}
}  // namespace

TEST_CASE("univariate resultant: values, order swap, and content") {
  // res(d+1, 8 d^2) = 8: the content of the quadratic enters once per degree
  // of the linear factor.  Regression guard: the content exponents must
  // follow the original argument order even after the internal degree swap.
  CHECK(resultantInt(UniPoly({Int(1), Int(1)}), UniPoly({Int(0), Int(0), Int(8)})) == Int(8));
  CHECK(resultantInt(UniPoly({Int(0), Int(0), Int(8)}), UniPoly({Int(1), Int(1)})) == Int(8));
  // res(d+3, 8 d^2 + 8 d - 8) = 8 * ((-3)^2 - 3 - 1) = 40.
  CHECK(resultantInt(UniPoly({Int(3), Int(1)}), UniPoly({Int(-8), Int(8), Int(8)})) == Int(40));
  // Sign convention: res(a, b) = (-1)^{deg a * deg b} res(b, a).
  const UniPoly a({Int(-2), Int(0), Int(1)});  // d^2 - 2
  const UniPoly b({Int(1), Int(3), Int(0), Int(2)});  // 2 d^3 + 3 d + 1
  CHECK(resultantInt(a, b) == resultantInt(b, a));  // even product of degrees
  const UniPoly l({Int(5), Int(1)});
  const UniPoly m({Int(-1), Int(4), Int(0), Int(3)});
  CHECK(resultantInt(l, m) == -resultantInt(m, l));  // odd * odd
  // Zero input.
  CHECK(resultantInt(UniPoly(), a) == Int(0));
}

TEST_CASE("bivariate resultant by interpolation") {
  const SparsePoly dMinusC = SparsePoly::fromUni(UniPoly({Int(0), Int(1)}), Var::d) -
                             SparsePoly::fromUni(UniPoly({Int(0), Int(1)}), Var::c);
  const SparsePoly dPlusC = SparsePoly::fromUni(UniPoly({Int(0), Int(1)}), Var::d) +
                            SparsePoly::fromUni(UniPoly({Int(0), Int(1)}), Var::c);
  const SparsePoly r = qrc::resultant(dMinusC, dPlusC, Var::d);
  CHECK(r.toString() == "2*c");

  // Eliminating d from the degree-(1,3) pair gives the exact cubic.
  const SparsePoly rd = qrc::resultant(fam(FamilyId::P, 3), fam(FamilyId::G, 1), Var::d);
  CHECK(rd.toString() == "-c^3 + 4*c^2 + 12*c + 8");

  // A constant second argument raises no nodes: res_d(f, 5) = 5^{deg_d f}.
  const SparsePoly five = SparsePoly::constant(Int(5));
  const SparsePoly rc = qrc::resultant(fam(FamilyId::P, 3), five, Var::d);
  CHECK(rc.toString() == "5");

  // A shared factor collapses the resultant to zero, which is rejected.
  const SparsePoly p3 = fam(FamilyId::P, 3);
  CHECK_THROWS_AS(qrc::resultant(p3, p3, Var::d), std::runtime_error);
}

TEST_CASE("complex root finder on exact polynomials") {
  // c^2 - 1: roots -1, 1 in canonical (re, im) order.
  const auto r1 = qrc::complex_roots(UniPoly({Int(-1), Int(0), Int(1)}), 128);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].re.toDouble() == doctest::Approx(-1.0).epsilon(1e-25));
  CHECK(r1[1].re.toDouble() == doctest::Approx(1.0).epsilon(1e-25));
  CHECK(std::abs(r1[0].im.toDouble()) < 1e-30);

  // 2c^3 + 3c^2 + c = c (c+1) (2c+1): includes an exact origin root.
  const auto r2 = qrc::complex_roots(UniPoly({Int(0), Int(1), Int(3), Int(2)}), 128);
  REQUIRE(r2.size() == 3);
  CHECK(r2[0].re.toDouble() == doctest::Approx(-1.0).epsilon(1e-25));
  CHECK(r2[1].re.toDouble() == doctest::Approx(-0.5).epsilon(1e-25));
  CHECK(r2[2].re.toDouble() == 0.0);
  CHECK(r2[2].re.isZero());  // the origin root is exact, not approximate

  // Repeated factors are removed before iteration: (c-1)^2 gives one root.
  const auto r3 = qrc::complex_roots(UniPoly({Int(1), Int(-2), Int(1)}), 128);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].re.toDouble() == doctest::Approx(1.0).epsilon(1e-25));

  CHECK_THROWS_AS(qrc::complex_roots(UniPoly(), 128), std::domain_error);

  // Determinism: a second run returns bitwise-identical values.
  const auto r4 = qrc::complex_roots(UniPoly({Int(0), Int(1), Int(3), Int(2)}), 128);
  REQUIRE(r4.size() == r2.size());
  for (size_t i = 0; i < r4.size(); ++i) {
    CHECK(r4[i].re == r2[i].re);
    CHECK(r4[i].im == r2[i].im);
  }
}

TEST_CASE("root finder handles lopsided coefficient magnitudes") {
  // (c - 2^120)(c - 1)(c + 1): the Newton-polygon start must reach the
  // far-out root without exhausting the iteration budget.
  const Int big = Int::pow2(120);
  // (c^2 - 1)(c - big) = c^3 - big c^2 - c + big
  const UniPoly p({big, Int(-1), -big, Int(1)});
  const auto rs = qrc::complex_roots(p, 256);
  REQUIRE(rs.size() == 3);
  CHECK(rs[0].re.toDouble() == doctest::Approx(-1.0).epsilon(1e-25));
  CHECK(rs[1].re.toDouble() == doctest::Approx(1.0).epsilon(1e-25));
  CHECK(rs[2].re.toDouble() == doctest::Approx(std::ldexp(1.0, 120)).epsilon(1e-25));
}

TEST_CASE("affine intersection counts for small systems") {
  // Degree-(1,3) system: 3 affine points, none on d = 0.
  const auto r1 = qrc::affine_intersections(fam(FamilyId::P, 3), fam(FamilyId::G, 1), true, 256);
  CHECK(r1.count == 3);
  const auto r1all = qrc::affine_intersections(fam(FamilyId::P, 3), fam(FamilyId::G, 1), false, 256);
  CHECK(r1all.count == 3);

  // Degree-(1,10) system: 10 affine points, exactly one on d = 0.
  const auto r2 = qrc::affine_intersections(fam(FamilyId::P, 3), fam(FamilyId::G, 3), true, 256);
  CHECK(r2.count == 9);
  const auto r2all = qrc::affine_intersections(fam(FamilyId::P, 3), fam(FamilyId::G, 3), false, 256);
  CHECK(r2all.count == 10);
  // The excluded point is (-1, 0) exactly.
  bool sawZeroD = false;
  for (const auto& pt : r2all.points) sawZeroD = sawZeroD || pt.dExactlyZero;
  CHECK(sawZeroD);

  // Cubic-line pencil cell: 4 points off d = 0.
  const auto r3 = qrc::affine_intersections(fam(FamilyId::CPplus2dQ, 3), qrc::lr_cubic(Rat(1, 2)),
                                            true, 256);
  CHECK(r3.count == 4);

  CHECK_THROWS_AS(qrc::affine_intersections(fam(FamilyId::P, 3), fam(FamilyId::G, 1), true, 64),
                  std::domain_error);
  CHECK_THROWS_AS(
      qrc::affine_intersections(SparsePoly::constant(Int(0)), fam(FamilyId::G, 1), true, 256),
      std::domain_error);
  const SparsePoly inA = SparsePoly::fromUni(UniPoly({Int(0), Int(1)}), Var::a);
  CHECK_THROWS_AS(qrc::affine_intersections(inA, fam(FamilyId::G, 1), true, 256),
                  std::domain_error);
}

TEST_CASE("two-cycle pencil counts follow the closed form") {
  for (long n = 3; n <= 7; ++n) {
    const long expect = (1L << (n - 1)) - 1 - ((n % 2 == 0) ? 1 : 0);
    const auto r = qrc::affine_intersections(fam(FamilyId::P, n), fam(FamilyId::G, 1), true, 256);
    CHECK(r.count == expect);
  }
}

TEST_CASE("cubic-line cell counts and the degree accounting identity") {
  for (long j = 3; j <= 6; ++j) {
    const auto r = qrc::affine_intersections(fam(FamilyId::CPplus2dQ, j), qrc::lr_cubic(Rat(1, 2)),
                                             true, 256);
    const long count = r.count;
    CHECK(count == (1L << (j - 1)));
    // count + 1 + (1 - (-1)^j)/2 = 3 * deg: the full product is accounted for
    // by the affine points off d = 0 plus the points on d = 0.
    const Int lhs = Int(count) + Int(1) + Int((j % 2 == 1) ? 1 : 0);
    CHECK(lhs == Int(3) * qrc::family_cp2dq_degree(j));
  }
}

TEST_CASE("two-cycle table residuals match the oracle in both sources") {
  const long cases[4][2] = {{3, 3}, {3, 4}, {4, 4}, {4, 5}};
  for (const auto& nm : cases) {
    const CaseId id{CaseId::Kind::IV, nm[0], nm[1]};
    const auto [f, g] = qrc::case_polys(id);
    const auto oracle = qrc::affine_intersections(f, g, true, 256);
    const Int closed = qrc::curve_pair_residual(nm[0], nm[1]);
    CHECK(Int(oracle.count) == closed);
    for (Variant v : {kPD, kMR}) {
      CHECK(qrc::bezout_ledger(id, v, kCF).residual == closed);
      CHECK(qrc::bezout_ledger(id, v, kEL).residual == closed);
    }
  }
}

TEST_CASE("two-cycle ledger structure") {
  const CaseId id{CaseId::Kind::IV, 3, 3};
  const auto led = qrc::bezout_ledger(id, kPD, kCF);
  CHECK(led.degreeFirst == Int(1));
  CHECK(led.degreeSecond == Int(10));
  CHECK(led.product == Int(10));
  REQUIRE(led.items.size() == 1);
  CHECK(led.items[0].location == BoundaryLocation::Cpq);
  CHECK(led.items[0].q == 3);
  CHECK(led.items[0].point == 1);  // points are numbered 1..phi(q)/2 within each q
  CHECK(led.items[0].multiplicity == Int(1));
  CHECK(led.residual == Int(9));

  const auto el = qrc::bezout_ledger(id, kPD, kEL);
  REQUIRE(el.items.size() == 1);
  CHECK(el.items[0].multiplicity == Int(1));
  CHECK(el.residual == Int(9));
}

TEST_CASE("one-cycle ledger structure for the 18-point cell") {
  const CaseId id{CaseId::Kind::II, 6, 3};
  const auto pd = qrc::bezout_ledger(id, kPD, kCF);
  CHECK(pd.product == Int(18));
  REQUIRE(pd.items.size() == 3);
  CHECK(pd.items[0].location == BoundaryLocation::Origin00);
  CHECK(pd.items[0].multiplicity == Int(4));
  CHECK(pd.items[1].location == BoundaryLocation::VertexD);
  CHECK(pd.items[1].multiplicity == Int(3));
  CHECK(pd.items[2].location == BoundaryLocation::Cpq);
  CHECK(pd.items[2].q == 3);
  CHECK(pd.items[2].multiplicity == Int(0));  // zero rows stay on the grid
  CHECK(pd.residual == Int(11));

  const auto mr = qrc::bezout_ledger(id, kMR, kCF);
  CHECK(mr.items[2].multiplicity == Int(1));
  CHECK(mr.residual == Int(10));

  for (Variant v : {kPD, kMR}) {
    const auto el = qrc::bezout_ledger(id, v, kEL);
    CHECK(itemSum(el) == Int(8));
    CHECK(el.residual == Int(10));
  }
}

TEST_CASE("one-cycle closed-form residuals reproduce the sector table") {
  for (long m = 3; m <= 8; ++m)
    for (long j = 1; j < m; ++j) {
      const CaseId id{CaseId::Kind::II, m, j};
      for (Variant v : {kPD, kMR}) {
        const auto led = qrc::bezout_ledger(id, v, kCF);
        CHECK(led.residual == qrc::eta_ii_mj(m, j, v));
      }
      const auto table = qrc::golden::eta_ii_table(m, j);
      REQUIRE(table.has_value());
      CHECK(qrc::bezout_ledger(id, kPD, kCF).residual == *table);
    }
}

TEST_CASE("ledger validation rejects malformed cases") {
  CHECK_THROWS_AS(qrc::bezout_ledger(CaseId{CaseId::Kind::IV, 2, 3}, kPD, kCF),
                  std::domain_error);
  CHECK_THROWS_AS(qrc::bezout_ledger(CaseId{CaseId::Kind::IV, 4, 3}, kPD, kCF),
                  std::domain_error);
  CHECK_THROWS_AS(qrc::bezout_ledger(CaseId{CaseId::Kind::II, 3, 0}, kPD, kCF),
                  std::domain_error);
  CHECK_THROWS_AS(qrc::bezout_ledger(CaseId{CaseId::Kind::II, 3, 3}, kPD, kCF),
                  std::domain_error);
}

TEST_CASE("adjudication of the six disputed cells") {
  const long cells[6][2] = {{6, 3}, {7, 3}, {7, 4}, {8, 3}, {8, 4}, {8, 5}};
  for (const auto& mj : cells) {
    const CaseId id{CaseId::Kind::II, mj[0], mj[1]};
    const auto rec = qrc::adjudicate(id, 256, 200);
    REQUIRE(rec.oracle.has_value());
    CHECK(rec.verdict == Verdict::VariantResolved);
    // The oracle lands on the recurrence-variant value and on the measured
    // local multiplicities, one unit (or two) below the printed table.
    CHECK(*rec.oracle == rec.ledgerExactLocal);
    CHECK(*rec.oracle == rec.closedFormMarkov);
    CHECK(*rec.oracle != rec.closedFormPaper);
    REQUIRE(rec.paper.has_value());
    CHECK(*rec.paper == rec.closedFormPaper);
  }
}

TEST_CASE("adjudication of an undisputed cell") {
  const auto rec = qrc::adjudicate(CaseId{CaseId::Kind::II, 5, 2}, 256, 200);
  REQUIRE(rec.oracle.has_value());
  CHECK(*rec.oracle == Int(5));
  CHECK(rec.verdict == Verdict::AllAgree);
}

TEST_CASE("adjudication record serialization is byte-stable") {
  const auto rec = qrc::adjudicate(CaseId{CaseId::Kind::II, 6, 3}, 256, 200);
  CHECK(qrc::adjudication_json(rec) ==
        "{\"case\":\"II(6,3)\",\"paper\":11,"
        "\"closed_form\":{\"paper_variant\":11,\"markov_variant\":10},"
        "\"ledger\":{\"closed_form_paper\":11,\"closed_form_markov\":10,\"exact_local\":10},"
        "\"oracle\":10,\"verdict\":\"VariantResolved\"}");

  const auto iv = qrc::adjudicate(CaseId{CaseId::Kind::IV, 3, 3}, 256, 200);
  CHECK(qrc::adjudication_json(iv) ==
        "{\"case\":\"IV(3,3)\",\"paper\":null,"
        "\"closed_form\":{\"paper_variant\":9,\"markov_variant\":9},"
        "\"ledger\":{\"closed_form_paper\":9,\"closed_form_markov\":9,\"exact_local\":9},"
        "\"oracle\":9,\"verdict\":\"AllAgree\"}");
}

TEST_CASE("vertical-line cell adjudicates cleanly") {
  const auto rec = qrc::adjudicate(CaseId{CaseId::Kind::II, 3, 1}, 256, 200);
  REQUIRE(rec.oracle.has_value());
  CHECK(*rec.oracle == Int(1));
  CHECK(rec.verdict == Verdict::AllAgree);
}

TEST_CASE("table case enumeration") {
  const auto cases = qrc::all_table_cases();
  CHECK(cases.size() == 36);
  long ii = 0, iv = 0;
  std::set<std::string> names;
  for (const CaseId& id : cases) {
    (id.kind == CaseId::Kind::II ? ii : iv) += 1;
    names.insert(qrc::case_name(id));
  }
  CHECK(ii == 27);
  CHECK(iv == 9);
  CHECK(names.size() == 36);
  CHECK(names.count("II(6,3)") == 1);
  CHECK(names.count("II(8,1)") == 1);
  CHECK(names.count("IV(5,5)") == 1);
  CHECK(names.count("IV(3,7)") == 1);
  CHECK(names.count("IV(5,6)") == 0);  // product above the default budget
}

TEST_CASE("adjudication budget enforcement") {
  CHECK_THROWS_AS(qrc::adjudicate(CaseId{CaseId::Kind::IV, 5, 5}, 256, 100), std::domain_error);
}
