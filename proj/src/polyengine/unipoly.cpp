#include "qrc/polyengine/unipoly.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace qrc {

namespace {

size_t ceilLog2(size_t n) {
  size_t b = 0;
  size_t v = 1;
  while (v < n) {
    v <<= 1;
    ++b;
  }
  return b;
}

}  // namespace

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

UniPoly::UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Int& v) {
  UniPoly p;
  if (!v.isZero()) p.coeffs_.push_back(v);
  return p;
}

UniPoly UniPoly::monomial(const Int& coeff, size_t power) {
  UniPoly p;
  if (coeff.isZero()) return p;
  p.coeffs_.assign(power + 1, Int(0));
  p.coeffs_[power] = coeff;
  return p;
}

long UniPoly::order() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].isZero()) return static_cast<long>(i);
  return -1;
}

const Int& UniPoly::coeff(size_t i) const {
  static const Int kZero(0);
  if (i >= coeffs_.size()) return kZero;
  return coeffs_[i];
}

Int UniPoly::leading() const {
  if (coeffs_.empty()) return Int(0);
  return coeffs_.back();
}

Int UniPoly::content() const {
  Int g(0);
  for (const Int& c : coeffs_) g = gcd(g, c);
  return g.abs();
}

UniPoly UniPoly::primitivePart() const {
  if (coeffs_.empty()) return UniPoly();
  Int g = content();
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const Int& c : coeffs_) out.push_back(divExact(c, g));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::withPositiveLeading() const {
  if (coeffs_.empty() || leading().sign() > 0) return *this;
  return -*this;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Int> out;
  out.reserve(a.coeffs_.size());
  for (const Int& c : a.coeffs_) out.push_back(-c);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Int& k) const {
  if (k.isZero()) return UniPoly();
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const Int& c : coeffs_) out.push_back(c * k);
  return UniPoly(std::move(out));
}

size_t UniPoly::termCount() const {
  size_t n = 0;
  for (const Int& c : coeffs_)
    if (!c.isZero()) ++n;
  return n;
}

size_t UniPoly::maxCoeffBits() const {
  size_t b = 0;
  for (const Int& c : coeffs_)
    if (!c.isZero()) b = std::max(b, c.bitLength());
  return b;
}

namespace {

// Multiply two coefficient vectors by Kronecker substitution at x = 2^B.
// Each operand is packed as (positive part) - (negative part), so packing
// needs no borrow handling; the signed product is decoded by adding a bias
// of 2^{B-1} per slot before slicing.
std::vector<Int> kroneckerMul(const std::vector<Int>& a, const std::vector<Int>& b) {
  const size_t la = a.size(), lb = b.size();
  size_t bitsA = 0, bitsB = 0, na = 0, nb = 0;
  for (const Int& c : a)
    if (!c.isZero()) {
      ++na;
      bitsA = std::max(bitsA, c.bitLength());
    }
  for (const Int& c : b)
    if (!c.isZero()) {
      ++nb;
      bitsB = std::max(bitsB, c.bitLength());
    }
  const size_t slotBits0 = bitsA + bitsB + ceilLog2(std::min(na, nb)) + 2;
  const size_t slotBytes = (slotBits0 + 7) / 8;
  const size_t slotBits = slotBytes * 8;

  auto packSigned = [&](const std::vector<Int>& v, mpz_ptr out) {
    const size_t bytes = v.size() * slotBytes;
    std::vector<unsigned char> bufP(bytes, 0), bufN(bytes, 0);
    bool anyN = false;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i].isZero()) continue;
      unsigned char* dst = (v[i].sign() > 0 ? bufP.data() : (anyN = true, bufN.data())) + i * slotBytes;
      size_t cnt = 0;
      mpz_t mag;
      mpz_init(mag);
      mpz_abs(mag, v[i].raw());
      mpz_export(dst, &cnt, -1, 1, 0, 0, mag);
      mpz_clear(mag);
    }
    mpz_import(out, bytes, -1, 1, 0, 0, bufP.data());
    if (anyN) {
      mpz_t neg;
      mpz_init(neg);
      mpz_import(neg, bytes, -1, 1, 0, 0, bufN.data());
      mpz_sub(out, out, neg);
      mpz_clear(neg);
    }
  };

  mpz_t pa, pb;
  mpz_init(pa);
  mpz_init(pb);
  packSigned(a, pa);
  packSigned(b, pb);
  mpz_mul(pa, pa, pb);
  mpz_clear(pb);

  const size_t lr = la + lb - 1;
  // Bias every slot by 2^{slotBits-1} so the packed value becomes nonnegative
  // and slices decode independently.
  {
    std::vector<unsigned char> bias(lr * slotBytes, 0);
    for (size_t i = 0; i < lr; ++i) bias[i * slotBytes + slotBytes - 1] = 0x80;
    mpz_t bz;
    mpz_init(bz);
    mpz_import(bz, bias.size(), -1, 1, 0, 0, bias.data());
    mpz_add(pa, pa, bz);
    mpz_clear(bz);
  }
  if (mpz_sgn(pa) < 0) throw std::logic_error("kronecker decode underflow");

  std::vector<unsigned char> buf(lr * slotBytes, 0);
  size_t cnt = 0;
  mpz_export(buf.data(), &cnt, -1, 1, 0, 0, pa);
  mpz_clear(pa);
  if (cnt > buf.size()) throw std::logic_error("kronecker decode overflow");

  Int half = Int::pow2(static_cast<unsigned long>(slotBits - 1));
  std::vector<Int> out(lr, Int(0));
  mpz_t slot;
  mpz_init(slot);
  for (size_t i = 0; i < lr; ++i) {
    mpz_import(slot, slotBytes, -1, 1, 0, 0, buf.data() + i * slotBytes);
    Int v;
    mpz_set(v.raw(), slot);
    out[i] = v - half;
  }
  mpz_clear(slot);
  return out;
}

}  // namespace

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() || b.isZero()) return UniPoly();
  const size_t na = a.termCount(), nb = b.termCount();
  if (na * nb <= 4096) {
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].isZero()) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].isZero()) continue;
        mpz_addmul(out[i + j].raw(), a.coeffs_[i].raw(), b.coeffs_[j].raw());
      }
    }
    return UniPoly(std::move(out));
  }
  return UniPoly(kroneckerMul(a.coeffs_, b.coeffs_));
}

UniPoly UniPoly::shiftedUp(size_t k) const {
  if (isZero() || k == 0) return *this;
  std::vector<Int> out(coeffs_.size() + k, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shiftedDown(size_t k) const {
  if (isZero() || k == 0) return *this;
  if (order() < static_cast<long>(k)) throw std::domain_error("shiftedDown: not divisible by x^k");
  std::vector<Int> out(coeffs_.begin() + static_cast<long>(k), coeffs_.end());
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Int> out;
  out.reserve(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Int(static_cast<long>(i)));
  return UniPoly(std::move(out));
}

Int UniPoly::evalInt(const Int& x) const {
  Int acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Rat UniPoly::evalRat(const Rat& x) const {
  Rat acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rat(coeffs_[i]);
  return acc;
}

UniPoly UniPoly::reflected() const {
  std::vector<Int> out = coeffs_;
  for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return UniPoly(std::move(out));
}

std::optional<UniPoly> UniPoly::dividedExactly(const UniPoly& divisor) const {
  if (divisor.isZero()) throw std::domain_error("dividedExactly: zero divisor");
  if (isZero()) return UniPoly();
  if (degree() < divisor.degree()) return std::nullopt;
  // Long division over Q; succeed only when the remainder vanishes and the
  // quotient is integral.
  std::vector<Rat> rem;
  rem.reserve(coeffs_.size());
  for (const Int& c : coeffs_) rem.emplace_back(c);
  const long dd = divisor.degree();
  const Rat lead = Rat(divisor.leading());
  const long dq = degree() - dd;
  std::vector<Rat> quot(static_cast<size_t>(dq + 1), Rat(0));
  for (long k = dq; k >= 0; --k) {
    Rat q = rem[static_cast<size_t>(k + dd)] / lead;
    quot[static_cast<size_t>(k)] = q;
    if (q.isZero()) continue;
    for (long i = 0; i <= dd; ++i)
      rem[static_cast<size_t>(k + i)] -= q * Rat(divisor.coeff(static_cast<size_t>(i)));
  }
  for (const Rat& r : rem)
    if (!r.isZero()) return std::nullopt;
  std::vector<Int> out;
  out.reserve(quot.size());
  for (const Rat& q : quot) {
    if (!q.isInteger()) return std::nullopt;
    out.push_back(q.toInt());
  }
  return UniPoly(std::move(out));
}

long UniPoly::orderAt(const Rat& r) const {
  if (isZero()) throw std::domain_error("orderAt: zero polynomial");
  // (x - r) over Q corresponds to the primitive factor (den*x - num).
  UniPoly lin(std::vector<Int>{-r.numerator(), r.denominator()});
  return exponentOf(lin);
}

long UniPoly::exponentOf(const UniPoly& factor) const {
  if (factor.degree() < 1) throw std::domain_error("exponentOf: factor must be nonconstant");
  long e = 0;
  UniPoly cur = *this;
  while (true) {
    auto q = cur.dividedExactly(factor);
    if (!q) return e;
    cur = *q;
    ++e;
    if (cur.isZero()) throw std::logic_error("exponentOf: zero survived division");
  }
}

UniPoly pseudoRemainder(const UniPoly& a, const UniPoly& b) {
  if (b.isZero()) throw std::domain_error("pseudoRemainder: zero divisor");
  if (a.degree() < b.degree()) throw std::domain_error("pseudoRemainder: deg a < deg b");
  UniPoly r = a;
  const Int lb = b.leading();
  long e = a.degree() - b.degree() + 1;
  while (!r.isZero() && r.degree() >= b.degree()) {
    UniPoly t = b.shiftedUp(static_cast<size_t>(r.degree() - b.degree())).scaled(r.leading());
    r = r.scaled(lb) - t;
    --e;
  }
  while (e-- > 0) r = r.scaled(lb);
  return r;
}

UniPoly gcdPoly(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() && b.isZero()) return UniPoly();
  if (a.isZero()) return b.primitivePart().withPositiveLeading();
  if (b.isZero()) return a.primitivePart().withPositiveLeading();
  UniPoly A = a.primitivePart();
  UniPoly B = b.primitivePart();
  if (A.degree() < B.degree()) std::swap(A, B);
  Int g(1), h(1);
  while (true) {
    const long delta = A.degree() - B.degree();
    UniPoly R = pseudoRemainder(A, B);
    if (R.isZero()) break;
    if (R.degree() == 0) return UniPoly::constant(Int(1));
    A = B;
    Int denom = g * Int::pow(h, static_cast<unsigned long>(delta));
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(R.degree()) + 1);
    for (size_t i = 0; i <= static_cast<size_t>(R.degree()); ++i) out.push_back(divExact(R.coeff(i), denom));
    B = UniPoly(std::move(out));
    g = A.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = divExact(Int::pow(g, static_cast<unsigned long>(delta)),
                   Int::pow(h, static_cast<unsigned long>(delta - 1)));
    }
  }
  return B.primitivePart().withPositiveLeading();
}

UniPoly UniPoly::squarefreePart() const {
  if (isZero()) throw std::domain_error("squarefreePart: zero polynomial");
  if (degree() == 0) return UniPoly::constant(Int(1));
  UniPoly g = gcdPoly(*this, derivative());
  if (g.degree() == 0) return primitivePart().withPositiveLeading();
  // Divide over Q and renormalize to a primitive integer polynomial.
  auto q = dividedExactly(g);
  if (!q) {
    // The primitive part is always exactly divisible by the primitive gcd.
    q = primitivePart().dividedExactly(g);
    if (!q) throw std::logic_error("squarefreePart: gcd does not divide");
  }
  return q->primitivePart().withPositiveLeading();
}

Int resultantInt(UniPoly a, UniPoly b) {
  if (a.isZero() || b.isZero()) return Int(0);
  // Subresultant algorithm; returns the exact signed resultant.
  Int ca = a.content(), cb = b.content();
  a = a.primitivePart();
  b = b.primitivePart();
  // Content factor uses the original argument order: res(ca*a0, cb*b0) =
  // ca^{deg b} * cb^{deg a} * res(a0, b0).
  Int t = Int::pow(ca, static_cast<unsigned long>(b.degree())) *
          Int::pow(cb, static_cast<unsigned long>(a.degree()));
  int s = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1L) && (b.degree() & 1L)) s = -s;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    Int r = t * Int::pow(b.leading(), static_cast<unsigned long>(a.degree()));
    return s > 0 ? r : -r;
  }
  Int g(1), h(1);
  while (true) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1L) && (b.degree() & 1L)) s = -s;
    UniPoly R = pseudoRemainder(a, b);
    a = b;
    Int denom = g * Int::pow(h, static_cast<unsigned long>(delta));
    if (R.isZero()) return Int(0);
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(R.degree()) + 1);
    for (size_t i = 0; i <= static_cast<size_t>(R.degree()); ++i) out.push_back(divExact(R.coeff(i), denom));
    b = UniPoly(std::move(out));
    g = a.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divExact(Int::pow(g, static_cast<unsigned long>(delta)),
                   Int::pow(h, static_cast<unsigned long>(delta - 1)));
    }
    if (b.degree() <= 0) break;
  }
  if (b.isZero()) return Int(0);
  // h^{1 - deg a} * lc(b)^{deg a}, exact; deg a >= 1 after the loop.
  Int num = Int::pow(b.leading(), static_cast<unsigned long>(a.degree()));
  Int res = (a.degree() == 1)
                ? num
                : divExact(num, Int::pow(h, static_cast<unsigned long>(a.degree() - 1)));
  res = res * t;
  return s > 0 ? res : -res;
}

bool UniPoly::allCoeffsPositive() const {
  if (coeffs_.empty()) return false;
  for (const Int& c : coeffs_)
    if (!c.isZero() && c.sign() < 0) return false;
  return true;
}

bool UniPoly::allCoeffsNonNegative() const {
  for (const Int& c : coeffs_)
    if (c.sign() < 0) return false;
  return true;
}

std::string UniPoly::toString(const std::string& var) const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Int& c = coeffs_[i];
    if (c.isZero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0)
      os << "-";
    first = false;
    Int ac = c.abs();
    const bool unitCoeff = (ac == Int(1)) && i > 0;
    if (!unitCoeff) os << ac.toString();
    if (i > 0) {
      if (!unitCoeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace qrc
