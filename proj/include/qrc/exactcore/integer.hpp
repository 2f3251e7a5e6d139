#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qrc {

// Arbitrary-precision signed integer with value semantics.  Thin RAII wrapper
// over GMP's mpz layer; arithmetic is exact and never overflows.
class Int {
 public:
  Int() { mpz_init(z_); }
  Int(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit for literals
  explicit Int(const std::string& decimal) {
    if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
      mpz_clear(z_);
      throw std::invalid_argument("Int: cannot parse '" + decimal + "'");
    }
  }
  Int(const Int& o) { mpz_init_set(z_, o.z_); }
  Int(Int&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Int& operator=(const Int& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Int() { mpz_clear(z_); }

  static Int pow2(unsigned long e) {
    Int r;
    mpz_setbit(r.z_, e);
    return r;
  }
  static Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.z_, base.z_, e);
    return r;
  }
  // (-1)^k as an Int, for parity-laden closed forms.
  static Int minus1pow(long k) { return (k % 2 == 0) ? Int(1) : Int(-1); }

  friend Int operator+(const Int& a, const Int& b) {
    Int r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator-(const Int& a, const Int& b) {
    Int r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator-(const Int& a) {
    Int r;
    mpz_neg(r.z_, a.z_);
    return r;
  }
  friend Int operator*(const Int& a, const Int& b) {
    Int r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  Int& operator+=(const Int& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Int& operator-=(const Int& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Int& operator*=(const Int& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    int c = mpz_cmp(a.z_, b.z_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const Int& a, long b) { return mpz_cmp_si(a.z_, b) == 0; }

  int sign() const { return mpz_sgn(z_); }
  bool isZero() const { return mpz_sgn(z_) == 0; }
  Int abs() const {
    Int r;
    mpz_abs(r.z_, z_);
    return r;
  }
  bool odd() const { return mpz_odd_p(z_) != 0; }

  bool fitsLong() const { return mpz_fits_slong_p(z_) != 0; }
  long toLong() const {
    if (!fitsLong()) throw std::overflow_error("Int: value exceeds long range");
    return mpz_get_si(z_);
  }
  size_t bitLength() const { return mpz_sizeinbase(z_, 2); }

  std::string toString() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
  }

  friend Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  friend bool divisible(const Int& a, const Int& b) { return mpz_divisible_p(a.z_, b.z_) != 0; }
  // Exact quotient a/b; throws unless b divides a (integrality is an error
  // signal everywhere in this codebase, never a rounding opportunity).
  friend Int divExact(const Int& a, const Int& b) {
    if (b.isZero()) throw std::domain_error("divExact: division by zero");
    if (!divisible(a, b)) throw std::domain_error("divExact: " + a.toString() + " not divisible by " + b.toString());
    Int r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int floorDiv(const Int& a, const Int& b) {
    if (b.isZero()) throw std::domain_error("floorDiv: division by zero");
    Int r;
    mpz_fdiv_q(r.z_, a.z_, b.z_);
    return r;
  }

  // Raw handles for interop with GMP/MPFR call sites.
  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  mpz_t z_;
};

}  // namespace qrc
