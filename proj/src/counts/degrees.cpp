#include "qrc/counts/degrees.hpp"

#include <stdexcept>

namespace qrc {

namespace {
Int p2(long e) {
  if (e < 0) throw std::domain_error("degree closed form: negative exponent");
  return Int::pow2(static_cast<unsigned long>(e));
}
}  // namespace

Int family_p_degree(long n) {
  if (n < 1) throw std::domain_error("family_p_degree: need n >= 1");
  return divExact(p2(n) - Int(3) - Int::minus1pow(n), Int(6));
}

Int family_g_degree(long m) {
  if (m < 1) throw std::domain_error("family_g_degree: need m >= 1");
  return divExact(Int(7) * p2(m) + Int(3) - Int::minus1pow(m), Int(6));
}

Int family_cp2dq_degree(long j) {
  if (j < 1) throw std::domain_error("family_cp2dq_degree: need j >= 1");
  return divExact(p2(j) - Int::minus1pow(j) + Int(3), Int(6));
}

Int family_r_degree(long k) {
  if (k < 1) throw std::domain_error("family_r_degree: need k >= 1");
  return divExact(Int(7) * p2(k) - Int::minus1pow(k) - Int(3), Int(6));
}

Int family_r_min_degree(long k) {
  if (k < 1) throw std::domain_error("family_r_min_degree: need k >= 1");
  return p2(k - 1);
}

Int family_r1_degree(long k) {
  if (k < 1) throw std::domain_error("family_r1_degree: need k >= 1");
  return divExact(Int(5) * p2(k) - Int(3) + Int::minus1pow(k), Int(6));
}

Int family_t_degree(long m) {
  if (m < 1) throw std::domain_error("family_t_degree: need m >= 1");
  return p2(m) - Int(1);
}

Int family_u0_even_degree(long k) {
  if (k < 1) throw std::domain_error("family_u0_even_degree: need k >= 1");
  return divExact(p2(2 * k) - Int(1), Int(3));
}

Int family_t0_odd_degree(long k) {
  if (k < 0) throw std::domain_error("family_t0_odd_degree: need k >= 0");
  return divExact(p2(2 * k + 1) + Int(1), Int(3));
}

Int family_t0u0_sum_degree(long m) {
  if (m < 1) throw std::domain_error("family_t0u0_sum_degree: need m >= 1");
  return divExact(p2(m) - Int::minus1pow(m), Int(3));
}

Int origin_multiplicity(long k) {
  if (k < 1) throw std::domain_error("origin_multiplicity: need k >= 1");
  return p2(k - 1);
}

Int vertex_multiplicity(long j, long k) {
  if (j < 1 || k < 1) throw std::domain_error("vertex_multiplicity: need j, k >= 1");
  if (j % 2 == 0) return Int(0);
  return divExact(p2(k) - Int::minus1pow(k), Int(3));
}

}  // namespace qrc
