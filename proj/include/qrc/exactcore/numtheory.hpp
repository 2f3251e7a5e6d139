#pragma once

#include <vector>

#include "qrc/exactcore/integer.hpp"

namespace qrc {

// Euler totient of n >= 1 (count of 1 <= k <= n coprime to n).
// Throws std::domain_error for n <= 0.
Int euler_phi(long n);

// Moebius function of n >= 1: 0 if n has a squared prime factor, else
// (-1)^(number of prime factors).  Throws std::domain_error for n <= 0.
int moebius_mu(long n);

// All positive divisors of n >= 1 in ascending order.
// Throws std::domain_error for n <= 0.
std::vector<long> divisors(long n);

}  // namespace qrc
