#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qrc/exactcore/integer.hpp"
#include "qrc/exactcore/numtheory.hpp"
#include "qrc/exactcore/rational.hpp"

using qrc::Int;
using qrc::Rat;

TEST_CASE("integer arithmetic basics") {
  Int a(7), b(-3);
  CHECK(a + b == Int(4));
  CHECK(a - b == Int(10));
  CHECK(a * b == Int(-21));
  CHECK(-a == Int(-7));
  CHECK(a > b);
  CHECK(Int::pow2(10) == Int(1024));
  CHECK(Int::pow(Int(3), 4) == Int(81));
  CHECK(Int::minus1pow(5) == Int(-1));
  CHECK(Int::minus1pow(8) == Int(1));
  CHECK(Int("123456789012345678901234567890") * Int(0) == Int(0));
  CHECK(Int("-42").toLong() == -42);
  CHECK(Int::pow2(200).toString() == "1606938044258990275541962092341162602522202993782792835301376");
}

TEST_CASE("integer exact division and gcd") {
  CHECK(divExact(Int(84), Int(7)) == Int(12));
  CHECK_THROWS_AS(divExact(Int(85), Int(7)), std::domain_error);
  CHECK_THROWS_AS(divExact(Int(1), Int(0)), std::domain_error);
  CHECK(gcd(Int(84), Int(30)) == Int(6));
  CHECK(gcd(Int(0), Int(5)) == Int(5));
  CHECK(floorDiv(Int(-7), Int(2)) == Int(-4));
  CHECK(divisible(Int(21), Int(7)));
  CHECK_FALSE(divisible(Int(22), Int(7)));
}

TEST_CASE("rational canonical form and collapse to integer") {
  Rat half(1, 2), third(Int(2), Int(6));
  CHECK(third == Rat(1, 3));
  CHECK((half + third) == Rat(5, 6));
  CHECK((half * third) == Rat(1, 6));
  CHECK((half - half).isZero());
  CHECK((Rat(7, 3) / Rat(7, 3)) == Rat(1));
  CHECK_THROWS_AS(Rat(1, 2) / Rat(0), std::domain_error);
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);

  Rat six = Rat(12, 7) * Rat(7, 2);
  CHECK(six.isInteger());
  CHECK(six.toInt() == Int(6));
  CHECK_THROWS_AS(Rat(3, 2).toInt(), std::domain_error);
  CHECK(Rat(-4, 6).toString() == "-2/3");
  CHECK(Rat(-4, 6).numerator() == Int(-2));
  CHECK(Rat(-4, 6).denominator() == Int(3));
}

TEST_CASE("rational arithmetic roundtrip (randomized)") {
  std::mt19937_64 rng(0xC0FFEEu);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    Rat x(num(rng), den(rng)), y(num(rng), den(rng));
    CHECK((x + y) - y == x);
    if (!y.isZero()) CHECK((x / y) * y == x);
    CHECK((x * y) == (y * x));
  }
}

TEST_CASE("euler phi values") {
  CHECK(qrc::euler_phi(1) == Int(1));
  CHECK(qrc::euler_phi(6) == Int(2));
  CHECK(qrc::euler_phi(12) == Int(4));
  CHECK(qrc::euler_phi(97) == Int(96));
  CHECK_THROWS_AS(qrc::euler_phi(0), std::domain_error);
  CHECK_THROWS_AS(qrc::euler_phi(-5), std::domain_error);
}

TEST_CASE("moebius mu values") {
  CHECK(qrc::moebius_mu(1) == 1);
  CHECK(qrc::moebius_mu(6) == 1);
  CHECK(qrc::moebius_mu(12) == 0);
  CHECK(qrc::moebius_mu(30) == -1);
  CHECK_THROWS_AS(qrc::moebius_mu(0), std::domain_error);
}

TEST_CASE("divisor lists ascend") {
  CHECK(qrc::divisors(1) == std::vector<long>{1});
  CHECK(qrc::divisors(8) == std::vector<long>({1, 2, 4, 8}));
  CHECK(qrc::divisors(12) == std::vector<long>({1, 2, 3, 4, 6, 12}));
  CHECK_THROWS_AS(qrc::divisors(0), std::domain_error);
}

TEST_CASE("divisor-sum identities for phi and mu") {
  for (long n = 1; n <= 10000; ++n) {
    Int phiSum(0);
    int muSum = 0;
    for (long d : qrc::divisors(n)) {
      phiSum += qrc::euler_phi(d);
      muSum += qrc::moebius_mu(d);
    }
    REQUIRE(phiSum == Int(n));
    REQUIRE(muSum == (n == 1 ? 1 : 0));
  }
}
