#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrc/exactcore/integer.hpp"
#include "qrc/polyengine/unipoly.hpp"

namespace qrc {

// Canonical variable universe.  Every polynomial in the project lives in a
// subset of these variables; the fixed order (c, d, e, a, b, t) defines the
// lex tiebreak of the graded-lex term order and the column order of dumps.
enum class Var : int { c = 0, d = 1, e = 2, a = 3, b = 4, t = 5 };
inline constexpr int kVarCount = 6;
const char* var_name(Var v);

using Exps = std::array<unsigned, kVarCount>;

struct GradedLexLess {
  bool operator()(const Exps& x, const Exps& y) const {
    unsigned long dx = 0, dy = 0;
    for (int i = 0; i < kVarCount; ++i) {
      dx += x[i];
      dy += y[i];
    }
    if (dx != dy) return dx < dy;
    for (int i = 0; i < kVarCount; ++i)
      if (x[i] != y[i]) return x[i] < y[i];
    return false;
  }
};

// Sparse multivariate polynomial with exact integer coefficients.  Stored
// coefficients are never zero; equality is structural.  Products of large
// polynomials in at most two variables are computed by Kronecker
// substitution through the univariate layer.
class SparsePoly {
 public:
  SparsePoly() = default;  // zero
  static SparsePoly constant(const Int& v);
  static SparsePoly variable(Var v);
  static SparsePoly monomial(const Int& coeff, std::initializer_list<std::pair<Var, unsigned>> m);

  bool isZero() const { return terms_.empty(); }
  size_t termCount() const { return terms_.size(); }
  long totalDegree() const;     // -1 for zero
  long minTotalDegree() const;  // -1 for zero
  long degreeIn(Var v) const;   // 0 when the variable is absent; -1 for zero
  std::vector<Var> usedVars() const;
  Int constantTerm() const;
  Int coeffOf(const Exps& e) const;
  bool allCoeffsPositive() const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly scaled(const Int& k) const;
  SparsePoly square() const { return *this * *this; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly substituteZero(Var v) const;
  SparsePoly derivative(Var v) const;
  // Conversion to/from the dense univariate layer.  toUni throws when any
  // other variable appears.
  UniPoly toUni(Var v) const;
  static SparsePoly fromUni(const UniPoly& p, Var v);

  // Multiply each term by hv^{target - totalDegree(term)}.  target = -1
  // means the total degree.  Throws if hv already appears or if any term
  // exceeds the target.
  SparsePoly homogenized(Var hv, long target = -1) const;

  Int content() const;
  SparsePoly primitivePart() const;
  // Primitive with positive graded-lex-leading coefficient.
  SparsePoly normalizedUnit() const;

  const std::map<Exps, Int, GradedLexLess>& terms() const { return terms_; }
  void addTerm(const Exps& e, const Int& v);  // accumulate; erases on zero

  std::string dumpJson() const;
  std::string toString() const;

 private:
  std::map<Exps, Int, GradedLexLess> terms_;
};

struct DegreeReport {
  long totalDegree = -1;
  long minTotalDegree = -1;
  std::vector<std::pair<Var, long>> varDegrees;  // used variables, canonical order
  // Degree of the part free of every used variable except d (-1 when that
  // part vanishes).  For the curve families this is the vertex-direction
  // degree that enters local intersection accounting.
  long pureDPartDegree = -1;
  bool minFormSingleMonomial = false;
  std::optional<Var> minFormVar;  // set when the minimal form is a pure power
};

// Degree/valuation summary; rejects the zero polynomial.
DegreeReport degree_report(const SparsePoly& p);

}  // namespace qrc
