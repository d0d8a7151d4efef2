#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qcapelli {

/// Raised on invalid exact-arithmetic operations (division by zero, bad exponents).
struct arithmetic_error : std::runtime_error {
  explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients.  coeff[k] is the coefficient of q^k; no trailing zeros are
/// stored, and the zero polynomial has an empty coefficient vector.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(long c);  // NOLINT: implicit on purpose, scalars embed
  explicit ZPoly(mpz_class c);
  explicit ZPoly(std::vector<mpz_class> coeffs);

  static ZPoly monomial(mpz_class c, int deg);
  static ZPoly q();  // the indeterminate

  bool isZero() const { return c_.empty(); }
  bool isOne() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int lowDegree() const;  // smallest k with c_k != 0; -1 for zero
  const mpz_class& leading() const;
  const mpz_class& operator[](int k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool isMonomial() const;

  ZPoly operator-() const;
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;

  bool operator==(const ZPoly& o) const { return c_ == o.c_; }
  bool operator!=(const ZPoly& o) const { return c_ != o.c_; }

  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  mpz_class content() const;
  ZPoly dividedByContent() const;

  /// Exact division; throws arithmetic_error if the division leaves a remainder.
  ZPoly divExact(const ZPoly& d) const;

  /// Polynomial gcd over Z[q], primitive with positive leading coefficient
  /// except for the content factor: gcd(content) * gcd(primitive parts).
  static ZPoly gcd(const ZPoly& a, const ZPoly& b);

  std::string str() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Exact rational function in q over the integers: a reduced fraction
/// num/den of ZPoly with den != 0, gcd(num, den) = 1 and den having a positive
/// leading coefficient.  Canonicalization runs eagerly, so equality is
/// coefficient-wise equality of the stored pair.  Immutable in practice:
/// all arithmetic returns fresh values.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT: implicit scalar embed
  RatFunc(ZPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFunc(ZPoly num, ZPoly den);

  /// q^k for any integer k (negative exponents give 1/q^{-k}).
  static RatFunc qPower(long k);
  static RatFunc q() { return qPower(1); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws on zero divisor
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const;
  RatFunc pow(long k) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Textual form "num/den" with terms in descending q-degree, e.g.
  /// "(q^4 - 1)/(q^2 - 1)"; a unit denominator is omitted.
  std::string str() const;

 private:
  void reduce();
  ZPoly num_, den_;
};

inline RatFunc operator*(long a, const RatFunc& b) { return RatFunc(a) * b; }

}  // namespace qcapelli
