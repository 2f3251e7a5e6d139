#include "qrc/intersect/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qrc {

namespace {
mpfr_prec_t clampPrec(long bits) {
  if (bits < 2) throw std::domain_error("BigFloat: precision must be at least 2 bits");
  return static_cast<mpfr_prec_t>(bits);
}
}  // namespace

BigFloat::BigFloat(long precisionBits) {
  mpfr_init2(f_, clampPrec(precisionBits));
  mpfr_set_zero(f_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(f_, mpfr_get_prec(o.f_));
  mpfr_set(f_, o.f_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(f_, mpfr_get_prec(o.f_));
  mpfr_swap(f_, o.f_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(f_, mpfr_get_prec(o.f_));
    mpfr_set(f_, o.f_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(f_, o.f_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(f_); }

BigFloat BigFloat::fromLong(long v, long precisionBits) {
  BigFloat r(precisionBits);
  mpfr_set_si(r.f_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::fromInt(const Int& v, long precisionBits) {
  BigFloat r(precisionBits);
  mpfr_set_z(r.f_, v.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::fromRat(const Rat& v, long precisionBits) {
  BigFloat num = fromInt(v.numerator(), precisionBits);
  BigFloat den = fromInt(v.denominator(), precisionBits);
  return num / den;
}

BigFloat BigFloat::pow2(long e, long precisionBits) {
  BigFloat r(precisionBits);
  mpfr_set_si(r.f_, 1, MPFR_RNDN);
  mpfr_mul_2si(r.f_, r.f_, e, MPFR_RNDN);
  return r;
}

long BigFloat::precision() const { return static_cast<long>(mpfr_get_prec(f_)); }

int BigFloat::sign() const { return mpfr_sgn(f_); }

bool BigFloat::isZero() const { return mpfr_zero_p(f_) != 0; }

namespace {
long jointPrec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(jointPrec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(jointPrec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(jointPrec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.isZero()) throw std::domain_error("BigFloat: division by zero");
  BigFloat r(jointPrec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.f_, f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw std::domain_error("BigFloat: sqrt of negative value");
  BigFloat r(precision());
  mpfr_sqrt(r.f_, f_, MPFR_RNDN);
  return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) <= 0; }
bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) == 0; }

double BigFloat::toDouble() const { return mpfr_get_d(f_, MPFR_RNDN); }

std::string BigFloat::toString(size_t digits) const {
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10, digits, f_, MPFR_RNDN);
  if (s == nullptr) throw std::runtime_error("BigFloat: formatting failed");
  std::string mant(s);
  mpfr_free_str(s);
  const bool neg = !mant.empty() && mant[0] == '-';
  std::string abs = neg ? mant.substr(1) : mant;
  if (abs.empty() || isZero()) return "0";
  std::string out = (neg ? std::string("-0.") : std::string("0.")) + abs;
  out += "e" + std::to_string(static_cast<long>(exp));
  return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat den = b.absSq();
  if (den.isZero()) throw std::domain_error("BigComplex: division by zero");
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

}  // namespace qrc
