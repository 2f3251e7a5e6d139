#pragma once

#include <mpfr.h>

#include <string>

#include "qrc/exactcore/integer.hpp"
#include "qrc/exactcore/rational.hpp"

namespace qrc {

// Arbitrary-precision binary float with value semantics.  Every value
// carries its own precision; binary operations compute at the larger of the
// two operand precisions.  Rounding is always to nearest.
class BigFloat {
 public:
  explicit BigFloat(long precisionBits = 64);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat fromLong(long v, long precisionBits);
  static BigFloat fromInt(const Int& v, long precisionBits);
  static BigFloat fromRat(const Rat& v, long precisionBits);
  // 2^e, exact.
  static BigFloat pow2(long e, long precisionBits);

  long precision() const;
  int sign() const;
  bool isZero() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  BigFloat abs() const;
  BigFloat sqrt() const;

  // Three-way comparisons (total order; NaNs never occur in this codebase).
  friend bool operator<(const BigFloat& a, const BigFloat& b);
  friend bool operator<=(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b);

  double toDouble() const;
  std::string toString(size_t digits = 20) const;

  mpfr_ptr raw() { return f_; }
  mpfr_srcptr raw() const { return f_; }

 private:
  mpfr_t f_;
};

BigFloat max(const BigFloat& a, const BigFloat& b);

// Complex number over BigFloat.
struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(long precisionBits = 64)
      : re(precisionBits), im(precisionBits) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigFloat& a, const BigComplex& b) {
    return {a * b.re, a * b.im};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

  BigFloat absSq() const { return re * re + im * im; }
  BigFloat abs() const { return absSq().sqrt(); }
  bool isZero() const { return re.isZero() && im.isZero(); }
};

}  // namespace qrc
