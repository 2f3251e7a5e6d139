#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrc/exactcore/integer.hpp"
#include "qrc/exactcore/rational.hpp"

namespace qrc {

// Dense univariate polynomial with exact integer coefficients, stored in
// ascending powers with a trimmed (nonzero) leading coefficient.  Large
// products are computed by Kronecker substitution: pack the coefficients
// into one big integer, multiply once, unpack.
class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  explicit UniPoly(std::vector<Int> coeffs);
  static UniPoly constant(const Int& v);
  static UniPoly monomial(const Int& coeff, size_t power);

  bool isZero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
  long order() const;                                                    // -1 for zero
  const Int& coeff(size_t i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int leading() const;
  Int content() const;  // nonnegative gcd of coefficients; 0 for zero poly
  UniPoly primitivePart() const;
  UniPoly withPositiveLeading() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Int& k) const;
  UniPoly square() const { return *this * *this; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly shiftedUp(size_t k) const;    // multiply by x^k
  UniPoly shiftedDown(size_t k) const;  // divide by x^k; throws unless divisible
  UniPoly derivative() const;
  Int evalInt(const Int& x) const;
  Rat evalRat(const Rat& x) const;
  // Substitute x -> -x.
  UniPoly reflected() const;

  // Exact quotient if divisor divides this polynomial over Q with an
  // integer-coefficient result; nullopt otherwise.
  std::optional<UniPoly> dividedExactly(const UniPoly& divisor) const;

  // Largest k with (x - r)^k dividing the polynomial.
  long orderAt(const Rat& r) const;
  // Largest k with factor^k dividing the polynomial.
  long exponentOf(const UniPoly& factor) const;

  // gcd over Q, returned primitive with positive leading coefficient.
  friend UniPoly gcdPoly(const UniPoly& a, const UniPoly& b);
  UniPoly squarefreePart() const;

  // Exact resultant of two integer polynomials (subresultant algorithm,
  // sign included).  Zero when either input is zero.
  friend Int resultantInt(UniPoly a, UniPoly b);

  bool allCoeffsPositive() const;
  bool allCoeffsNonNegative() const;
  size_t termCount() const;       // number of nonzero coefficients
  size_t maxCoeffBits() const;    // bit length of the largest |coefficient|

  std::string toString(const std::string& var) const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

// Pseudo-remainder: the remainder of lc(b)^{deg a - deg b + 1} * a divided
// by b (exact over the integers).  Requires deg a >= deg b >= 0.
UniPoly pseudoRemainder(const UniPoly& a, const UniPoly& b);

}  // namespace qrc
