#include "qrc/limbcomb/limbcomb.hpp"

#include <numeric>
#include <stdexcept>

#include "qrc/exactcore/numtheory.hpp"
#include "qrc/exactcore/rational.hpp"

namespace qrc {

LimbIndex::LimbIndex(long p_, long q_) : p(p_), q(q_) {
  if (!(1 <= p && p < q)) throw std::domain_error("LimbIndex: need 1 <= p < q");
  if (std::gcd(p, q) != 1) throw std::domain_error("LimbIndex: p/q must be in lowest terms");
}

MarkovState::MarkovState(long q) : q_(q) {
  if (q < 2) throw std::domain_error("MarkovState: need q >= 2");
  a_.assign(static_cast<size_t>(q), Int(0));
  a_.back() = Int(1);
}

Int MarkovState::mass() const {
  Int s(0);
  for (const Int& v : a_) s += v;
  return s;
}

void MarkovState::step() {
  Int tail(0);
  for (size_t i = 1; i < a_.size(); ++i) tail += a_[i];
  Int last = Int(2) * a_[0] + tail;
  for (size_t i = 0; i + 1 < a_.size(); ++i) a_[i] = a_[i + 1];
  a_.back() = last;
  ++n_;
  if (mass() != Int::pow2(static_cast<unsigned long>(n_)))
    throw std::logic_error("MarkovState: mass invariant violated at step " + std::to_string(n_));
}

IntervalCount interval_count(long q, long m) {
  if (q < 2) throw std::domain_error("interval_count: need q >= 2");
  if (m < 1) throw std::domain_error("interval_count: need m >= 1");
  Int dq = Int::pow2(static_cast<unsigned long>(q)) - Int(1);
  Int dm = Int::pow2(static_cast<unsigned long>(m)) - Int(1);
  // k ranges over integers in the closed interval [dm/dq, 2*dm/dq]:
  // lo = ceil(dm/dq), hi = floor(2*dm/dq).
  Int lo = floorDiv(dm + dq - Int(1), dq);
  Int hi = floorDiv(Int(2) * dm, dq);
  Int K = hi < lo ? Int(0) : hi - lo + Int(1);
  if (K.odd())
    throw std::logic_error("interval_count(" + std::to_string(q) + "," + std::to_string(m) +
                           "): odd lattice count " + K.toString());
  return {K, divExact(K, Int(2))};
}

Int markov_nu_prime(long q, long j) {
  if (q < 2) throw std::domain_error("markov_nu_prime: need q >= 2");
  if (j < 1) throw std::domain_error("markov_nu_prime: need j >= 1");
  MarkovState st(q);
  for (long n = 0; n < j - 1; ++n) st.step();
  return st.a(1);
}

Int s_sum(long j) {
  if (j < 2) throw std::domain_error("s_sum: need j >= 2");
  Int s(0);
  for (long q = 2; q <= j; ++q) s += euler_phi(q) * markov_nu_prime(q, j);
  Int expected = Int::pow2(static_cast<unsigned long>(j - 1)) - Int(1);
  if (s != expected)
    throw std::logic_error("s_sum(" + std::to_string(j) + ") = " + s.toString() +
                           " but mass accounting demands " + expected.toString());
  return s;
}

Int t_count(long j) {
  if (j < 0) throw std::domain_error("t_count: need j >= 0");
  return Int::pow2(static_cast<unsigned long>(j)) - Int(j) - Int(1);
}

}  // namespace qrc
