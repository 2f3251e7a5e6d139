#include "qrc/exactcore/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qrc {

namespace {

// Trial-division factorization; inputs here are small indices (q, n, m),
// so this is more than fast enough and easy to audit.
std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> fac;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  return fac;
}

void requirePositive(long n, const char* who) {
  if (n <= 0) throw std::domain_error(std::string(who) + ": argument must be positive");
}

}  // namespace

Int euler_phi(long n) {
  requirePositive(n, "euler_phi");
  Int phi(1);
  for (auto [p, e] : factorize(n)) {
    Int pk = Int::pow(Int(p), static_cast<unsigned long>(e - 1));
    phi *= pk * Int(p - 1);
  }
  return phi;
}

int moebius_mu(long n) {
  requirePositive(n, "moebius_mu");
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e >= 2) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<long> divisors(long n) {
  requirePositive(n, "divisors");
  std::vector<long> divs{1};
  for (auto [p, e] : factorize(n)) {
    size_t old = divs.size();
    long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace qrc
