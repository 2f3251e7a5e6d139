#pragma once

#include <gmp.h>

#include <compare>
#include <stdexcept>
#include <string>

#include "qrc/exactcore/integer.hpp"

namespace qrc {

// Exact rational number, always stored in canonical (lowest-terms,
// positive-denominator) form.  Wraps GMP's mpq layer with value semantics.
class Rat {
 public:
  Rat() { mpq_init(q_); }
  Rat(long v) {  // NOLINT: implicit for literals
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rat(const Int& num) {  // NOLINT: implicit Int -> Rat embedding
    mpq_init(q_);
    mpq_set_z(q_, num.raw());
  }
  Rat(const Int& num, const Int& den) {
    if (den.isZero()) throw std::domain_error("Rat: zero denominator");
    mpq_init(q_);
    mpq_set_num(q_, num.raw());
    mpq_set_den(q_, den.raw());
    mpq_canonicalize(q_);
  }
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}
  Rat(const Rat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rat() { mpq_clear(q_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator-(const Rat& a) {
    Rat r;
    mpq_neg(r.q_, a.q_);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (mpq_sgn(b.q_) == 0) throw std::domain_error("Rat: division by zero");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rat& operator+=(const Rat& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sign() const { return mpq_sgn(q_); }
  bool isZero() const { return mpq_sgn(q_) == 0; }
  Rat abs() const {
    Rat r;
    mpq_abs(r.q_, q_);
    return r;
  }

  Int numerator() const {
    Int n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
  }
  Int denominator() const {
    Int d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
  }
  bool isInteger() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  // Collapse to Int; by design a failed integrality expectation is a bug in a
  // closed form, so this throws rather than truncating.
  Int toInt() const {
    if (!isInteger()) throw std::domain_error("Rat: " + toString() + " is not an integer");
    return numerator();
  }

  std::string toString() const {
    if (isInteger()) return numerator().toString();
    return numerator().toString() + "/" + denominator().toString();
  }

  mpq_srcptr raw() const { return q_; }

 private:
  mpq_t q_;
};

}  // namespace qrc
