#include "qrc/counts/counts.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "qrc/counts/degrees.hpp"
#include "qrc/exactcore/numtheory.hpp"

namespace qrc {

namespace {

// 2^e as an exact rational, with e allowed to be negative.
Rat rpow2(long e) {
  if (e >= 0) return Rat(Int::pow2(static_cast<unsigned long>(e)));
  return Rat(Int(1), Int::pow2(static_cast<unsigned long>(-e)));
}

Rat rsign(long k) { return Rat(Int::minus1pow(k)); }

Int finishCount(const Rat& val, const char* who) {
  Int out = val.toInt();
  if (out.sign() < 0) throw std::logic_error(std::string(who) + ": negative count " + out.toString());
  return out;
}

}  // namespace

const char* variant_name(Variant v) {
  return v == Variant::PaperDisplay ? "paper" : "markov";
}

Int nu(long q, long n) {
  if (q < 2) throw std::domain_error("nu: need q >= 2");
  if (n < 1) throw std::domain_error("nu: need n >= 1");
  long r = n % q;
  Rat denom(Int::pow2(static_cast<unsigned long>(q)) - Int(1));
  Rat val;
  if (r != 0) {
    val = Rat(Int::pow2(static_cast<unsigned long>(n - 1)) -
              Int::pow2(static_cast<unsigned long>(r - 1))) /
          denom;
  } else {
    val = (Rat(Int::pow2(static_cast<unsigned long>(n - 1))) - Rat(1, 2)) / denom + Rat(1, 2);
  }
  return finishCount(val, "nu");
}

Int nu_prime(long q, long j, Variant v) {
  if (q < 2) throw std::domain_error("nu_prime: need q >= 2");
  if (j < 1) throw std::domain_error("nu_prime: need j >= 1");
  long J = j - 1;
  long r = J % q;
  if (v == Variant::PaperDisplay && J < q) return Int(0);
  Rat denom(Int::pow2(static_cast<unsigned long>(q)) - Int(1));
  Rat val = Rat(Int::pow2(static_cast<unsigned long>(J)) -
                Int::pow2(static_cast<unsigned long>(r))) /
            denom;
  if (r == q - 1) val += Rat(1);
  return finishCount(val, "nu_prime");
}

Int eta_iv(long n, long m, Variant v) {
  if (n < 1 || m < 1) throw std::domain_error("eta_iv: need n, m >= 1");
  if (n > m) std::swap(n, m);
  Rat val = Rat(1, 3) * (Rat(5) * rpow2(n + m - 3) + rpow2(n - 2) + rpow2(m - 2));
  for (long q = 2; q <= n; ++q)
    val -= Rat(1, 2) * Rat(euler_phi(q)) * Rat(nu(q, n)) * Rat(nu(q, m));
  val -= Rat(eta_ii(std::gcd(n, m), v));
  val += Rat(1, 6) * (rsign(n) + rsign(m) + rsign(n + m));
  return finishCount(val, "eta_iv");
}

Int eta_iv_exact_first(long n, long m, Variant v) {
  if (n < 1 || m < 1) throw std::domain_error("eta_iv_exact_first: need n, m >= 1");
  Rat val(0);
  for (long d : divisors(n)) val += Rat(moebius_mu(n / d)) * Rat(eta_iv(d, m, v));
  return finishCount(val, "eta_iv_exact_first");
}

Rat eta_iv_coefficient(long n) {
  if (n < 1) throw std::domain_error("eta_iv_coefficient: need n >= 1");
  Rat c = Rat(5, 3) * rpow2(n - 3) + Rat(1, 12);
  for (long q = 2; q <= n; ++q)
    c -= Rat(1, 4) * Rat(euler_phi(q)) * Rat(nu(q, n)) /
         Rat(Int::pow2(static_cast<unsigned long>(q)) - Int(1));
  return c;
}

Rat epsilon(long n, long m, Variant v) {
  if (!(1 <= n && n <= m)) throw std::domain_error("epsilon: need 1 <= n <= m");
  return Rat(eta_iv(n, m, v)) - eta_iv_coefficient(n) * rpow2(m);
}

Int epsilon_bound(long n, long m) {
  if (n < 1 || m < 1) throw std::domain_error("epsilon_bound: need n, m >= 1");
  return Int::pow2(static_cast<unsigned long>(n)) +
         Int::pow2(static_cast<unsigned long>(2 * std::gcd(n, m)));
}

Int eta_ii_mj(long m, long j, Variant v) {
  if (m < 3) throw std::domain_error("eta_ii_mj: need m >= 3");
  if (!(1 <= j && j <= m - 1)) throw std::domain_error("eta_ii_mj: need 1 <= j <= m-1");
  long k = m - j;
  Rat val = Rat(7, 36) * rpow2(m) - Rat(1, 12) * (rpow2(j) + rpow2(k)) -
            Rat(rsign(m)) * Rat(1, 36) *
                (Rat(Int::pow(Int(-2), static_cast<unsigned long>(j))) +
                 Rat(Int::pow(Int(-2), static_cast<unsigned long>(k)))) -
            Rat(1, 4) - Rat(5, 36) * rsign(m) + Rat(1, 12) * (rsign(j) + rsign(k));
  for (long q = 3; q <= std::max(j, k); ++q)
    val -= Rat(1, 2) * Rat(euler_phi(q)) * Rat(nu_prime(q, j, v)) * Rat(nu_prime(q, k, v));
  return finishCount(val, "eta_ii_mj");
}

Int eta_ii_weighted(long m, Variant v) {
  if (m < 3) throw std::domain_error("eta_ii_weighted: need m >= 3");
  Rat val = Rat(7, 36) * Rat(m) * rpow2(m) - Rat(37, 108) * rpow2(m) - Rat(m, 4) -
            rsign(m) * Rat(5, 36) * Rat(m) + Rat(1, 2) + rsign(m) * Rat(5, 54);
  for (long q = 3; q <= m - 1; ++q) {
    Rat inner(0);
    for (long j = 1; j <= m - 1; ++j)
      inner += Rat(nu_prime(q, j, v)) * Rat(nu_prime(q, m - j, v));
    val -= Rat(1, 2) * Rat(euler_phi(q)) * inner;
  }
  return finishCount(val, "eta_ii_weighted");
}

Int eta_prime_ii(long m, Variant v) {
  if (m < 2) throw std::domain_error("eta_prime_ii: need m >= 2");
  static std::map<std::pair<long, int>, Int> cache;
  static std::mutex cacheMutex;
  auto key = std::make_pair(m, static_cast<int>(v));
  {
    std::lock_guard<std::mutex> lock(cacheMutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int result(1);
  if (m >= 3) {
    Rat val(eta_ii_weighted(m, v));
    for (long d : divisors(m))
      if (d >= 3 && d < m) val -= Rat(m / d) * Rat(eta_prime_ii(d, v));
    result = finishCount(val, "eta_prime_ii");
  }
  std::lock_guard<std::mutex> lock(cacheMutex);
  cache.emplace(key, result);
  return result;
}

Int eta_ii(long m, Variant v) {
  if (m < 1) throw std::domain_error("eta_ii: need m >= 1");
  Int s(0);
  for (long d : divisors(m))
    if (d >= 2) s += eta_prime_ii(d, v);
  return s;
}

Int eta_iv_from_degree_product(long n, long m, Variant v) {
  if (n < 1 || m < 1) throw std::domain_error("eta_iv_from_degree_product: need n, m >= 1");
  if (n > m) std::swap(n, m);
  // Leading block: the product of the two homogenized curve degrees.
  Rat val = Rat(1, 36) *
            Rat(Int::pow2(static_cast<unsigned long>(n)) - Int(3) - Int::minus1pow(n)) *
            Rat(Int(7) * Int::pow2(static_cast<unsigned long>(m)) + Int(3) - Int::minus1pow(m));
  // Root-of-unity corrections for odd denominators q >= 3.
  for (long q = 3; q <= n; ++q)
    val -= Rat(1, 2) * Rat(euler_phi(q)) * Rat(nu(q, n)) * Rat(nu(q, m));
  // The q = 2 correction and its closed-form twin; these cancel exactly
  // because nu(2,k) = 2^k/6 + (-1)^k/3.
  val -= Rat(1, 2) * Rat(nu(2, n)) * Rat(nu(2, m));
  val += Rat(1, 2) * (rpow2(n) * Rat(1, 6) + rsign(n) * Rat(1, 3)) *
         (rpow2(m) * Rat(1, 6) + rsign(m) * Rat(1, 3));
  // Parity block.
  val += (Rat(4) + rsign(n)) * Rat(1, 6) * rpow2(m) -
         (Rat(1) + rsign(n)) * rsign(m) * Rat(1, 6) +
         (Rat(1) + rsign(n)) * (Rat(1) + rsign(m)) * Rat(1, 4);
  // Shared one-cycle block.
  val -= Rat(eta_ii(std::gcd(n, m), v));
  return finishCount(val, "eta_iv_from_degree_product");
}

Int curve_pair_residual(long n, long m) {
  if (n < 1 || m < 1) throw std::domain_error("curve_pair_residual: need n, m >= 1");
  if (n > m) std::swap(n, m);
  Rat val(family_p_degree(n) * family_g_degree(m));
  for (long q = 3; q <= n; ++q)
    val -= Rat(1, 2) * Rat(euler_phi(q)) * Rat(nu(q, n)) * Rat(nu(q, m));
  return finishCount(val, "curve_pair_residual");
}

}  // namespace qrc
