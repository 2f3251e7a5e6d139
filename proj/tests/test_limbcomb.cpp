#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrc/exactcore/numtheory.hpp"
#include "qrc/limbcomb/limbcomb.hpp"

using qrc::Int;

TEST_CASE("limb index validity") {
  CHECK_NOTHROW(qrc::LimbIndex(1, 2));
  CHECK_NOTHROW(qrc::LimbIndex(3, 7));
  CHECK_THROWS_AS(qrc::LimbIndex(2, 2), std::domain_error);
  CHECK_THROWS_AS(qrc::LimbIndex(2, 4), std::domain_error);
  CHECK_THROWS_AS(qrc::LimbIndex(0, 3), std::domain_error);
}

TEST_CASE("interval lattice counts") {
  auto r33 = qrc::interval_count(3, 3);
  CHECK(r33.K == Int(2));
  CHECK(r33.nu == Int(1));
  auto r24 = qrc::interval_count(2, 4);
  CHECK(r24.K == Int(6));
  CHECK(r24.nu == Int(3));
  auto r34 = qrc::interval_count(3, 4);
  CHECK(r34.K == Int(2));
  CHECK(r34.nu == Int(1));
  CHECK(qrc::interval_count(5, 3).nu == Int(0));
  CHECK_THROWS_AS(qrc::interval_count(1, 3), std::domain_error);
  CHECK_THROWS_AS(qrc::interval_count(3, 0), std::domain_error);
}

TEST_CASE("transfer recurrence values") {
  Int want3[] = {Int(0), Int(0), Int(1), Int(1), Int(2), Int(5)};
  for (long j = 1; j <= 6; ++j) CHECK(qrc::markov_nu_prime(3, j) == want3[j - 1]);
  CHECK(qrc::markov_nu_prime(2, 2) == Int(1));
  CHECK(qrc::markov_nu_prime(4, 4) == Int(1));
  CHECK_THROWS_AS(qrc::markov_nu_prime(1, 3), std::domain_error);
  CHECK_THROWS_AS(qrc::markov_nu_prime(3, 0), std::domain_error);
}

TEST_CASE("state mass stays a power of two") {
  for (long q = 2; q <= 6; ++q) {
    qrc::MarkovState st(q);
    CHECK(st.mass() == Int(1));
    for (int n = 0; n < 30; ++n) {
      st.step();
      CHECK(st.mass() == Int::pow2(static_cast<unsigned long>(st.n())));
    }
  }
}

TEST_CASE("weighted sums collapse to 2^(j-1) - 1") {
  CHECK(qrc::s_sum(2) == Int(1));
  CHECK(qrc::s_sum(4) == Int(7));
  CHECK(qrc::s_sum(10) == Int(511));
  for (long j = 2; j <= 20; ++j)
    CHECK(qrc::s_sum(j) == Int::pow2(static_cast<unsigned long>(j - 1)) - Int(1));
}

TEST_CASE("t_count closed form") {
  CHECK(qrc::t_count(0) == Int(0));
  CHECK(qrc::t_count(2) == Int(1));
  CHECK(qrc::t_count(5) == Int(26));
  // Telescoping: t_count(j) - t_count(j-1) = s_sum(j) for j >= 2.
  for (long j = 2; j <= 20; ++j) CHECK(qrc::t_count(j) - qrc::t_count(j - 1) == qrc::s_sum(j));
  CHECK_THROWS_AS(qrc::t_count(-1), std::domain_error);
}

TEST_CASE("odd-q weighted sum has the corrected sign") {
  // sum_{3<=q<=j} phi(q)*markov(q,j) = (2^j - (-1)^j)/3 - 1 holds for all j;
  // the sign-flipped variant (2^j + (-1)^j)/3 - 1 fails for every j (it is
  // not even integral when j is odd).
  for (long j = 3; j <= 20; ++j) {
    Int s(0);
    for (long q = 3; q <= j; ++q) s += qrc::euler_phi(q) * qrc::markov_nu_prime(q, j);
    Int corrected =
        divExact(Int::pow2(static_cast<unsigned long>(j)) - Int::minus1pow(j), Int(3)) - Int(1);
    CHECK(s == corrected);
    Int three_s_plus_3 = Int(3) * (s + Int(1));
    Int flipped_numerator = Int::pow2(static_cast<unsigned long>(j)) + Int::minus1pow(j);
    CHECK(three_s_plus_3 != flipped_numerator);
  }
}

TEST_CASE("q=2 closed form") {
  for (long j = 1; j <= 24; ++j) {
    Int expected = divExact(
        Int::pow2(static_cast<unsigned long>(j - 1)) - Int::minus1pow(j - 1), Int(3));
    CHECK(qrc::markov_nu_prime(2, j) == expected);
  }
}
