#pragma once

#include <vector>

#include "qrc/exactcore/integer.hpp"

namespace qrc {

// A p/q limb label: p/q in lowest terms with 1 <= p < q.
struct LimbIndex {
  long p = 1;
  long q = 2;
  LimbIndex(long p_, long q_);
};

// State vector (a_1(n),...,a_q(n)) of the q-step transfer recurrence
//   a_1(n+1) = a_2(n), ..., a_{q-1}(n+1) = a_q(n),
//   a_q(n+1) = 2 a_1(n) + sum_{1<i<=q} a_i(n),
// started from a(0) = (0,...,0,1).  Total mass sum_i a_i(n) = 2^n is an
// invariant of the recurrence and is asserted on every step.
class MarkovState {
 public:
  explicit MarkovState(long q);
  void step();
  long n() const { return n_; }
  const Int& a(long i) const { return a_.at(static_cast<size_t>(i - 1)); }  // 1-based
  Int mass() const;

 private:
  long q_;
  long n_ = 0;
  std::vector<Int> a_;
};

struct IntervalCount {
  Int K;   // number of integer lattice points k with 1/(2^q-1) <= k/(2^m-1) <= 2/(2^q-1)
  Int nu;  // K/2 (K is required to be even)
};

// Counts integers k with 1/(2^q-1) <= k/(2^m-1) <= 2/(2^q-1), exactly.
// The count is always even (each admissible angle pairs with a partner);
// an odd count throws std::logic_error.  Requires q >= 2, m >= 1.
IntervalCount interval_count(long q, long m);

// a_1(j-1) of the transfer recurrence above; requires q >= 2, j >= 1.
Int markov_nu_prime(long q, long j);

// sum_{2<=q<=j} phi(q) * markov_nu_prime(q,j); asserts the result equals
// 2^{j-1} - 1 (throws std::logic_error otherwise).  Requires j >= 2.
Int s_sum(long j);

// 2^j - j - 1 for j >= 0.
Int t_count(long j);

}  // namespace qrc
