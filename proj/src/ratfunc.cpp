#include "qcapelli/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace qcapelli {

ZPoly::ZPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

ZPoly::ZPoly(mpz_class c) {
  if (c != 0) c_.push_back(std::move(c));
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(mpz_class c, int deg) {
  ZPoly p;
  if (c == 0) return p;
  if (deg < 0) throw arithmetic_error("ZPoly::monomial: negative degree");
  p.c_.assign(deg + 1, mpz_class(0));
  p.c_[deg] = std::move(c);
  return p;
}

ZPoly ZPoly::q() { return monomial(1, 1); }

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool ZPoly::isOne() const { return c_.size() == 1 && c_[0] == 1; }

int ZPoly::lowDegree() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

const mpz_class& ZPoly::leading() const {
  if (isZero()) throw arithmetic_error("leading coefficient of zero polynomial");
  return c_.back();
}

const mpz_class& ZPoly::operator[](int k) const {
  static const mpz_class zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

bool ZPoly::isMonomial() const {
  if (isZero()) return false;
  for (size_t k = 0; k + 1 < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

ZPoly ZPoly::operator-() const {
  ZPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t k = 0; k < r.c_.size(); ++k) {
    if (k < c_.size()) r.c_[k] += c_[k];
    if (k < o.c_.size()) r.c_[k] += o.c_[k];
  }
  r.trim();
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  ZPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t k = 0; k < r.c_.size(); ++k) {
    if (k < c_.size()) r.c_[k] += c_[k];
    if (k < o.c_.size()) r.c_[k] -= o.c_[k];
  }
  r.trim();
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (isZero() || o.isZero()) return ZPoly();
  ZPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

mpz_class ZPoly::content() const {
  mpz_class g(0);
  for (const auto& x : c_) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::dividedByContent() const {
  if (isZero()) return ZPoly();
  mpz_class g = content();
  ZPoly r(*this);
  for (auto& x : r.c_) x /= g;
  return r;
}

ZPoly ZPoly::divExact(const ZPoly& d) const {
  if (d.isZero()) throw arithmetic_error("division by zero polynomial");
  if (isZero()) return ZPoly();
  if (degree() < d.degree()) throw arithmetic_error("inexact polynomial division");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> quo(degree() - d.degree() + 1, mpz_class(0));
  for (int k = degree() - d.degree(); k >= 0; --k) {
    mpz_class& top = rem[k + d.degree()];
    if (top == 0) continue;
    mpz_class qk, r0;
    mpz_tdiv_qr(qk.get_mpz_t(), r0.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
    if (r0 != 0) throw arithmetic_error("inexact polynomial division");
    quo[k] = qk;
    for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= qk * d[j];
  }
  for (const auto& x : rem)
    if (x != 0) throw arithmetic_error("inexact polynomial division");
  return ZPoly(std::move(quo));
}

namespace {

// Primitive part with positive leading coefficient.
ZPoly primitivePositive(const ZPoly& a) {
  if (a.isZero()) return ZPoly();
  ZPoly p = a.dividedByContent();
  if (p.leading() < 0) return -p;
  return p;
}

// Pseudo-remainder of a by b (deg a >= deg b, b != 0): lc(b)^(da-db+1) * a mod b.
ZPoly pseudoRem(ZPoly a, const ZPoly& b) {
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  while (!a.isZero() && a.degree() >= db) {
    int shift = a.degree() - db;
    mpz_class la = a.leading();
    std::vector<mpz_class> coeffs(a.coeffs());
    for (auto& x : coeffs) x *= lb;
    ZPoly scaled{std::move(coeffs)};
    ZPoly sub = ZPoly::monomial(la, shift) * b;
    a = scaled - sub;
  }
  return a;
}

}  // namespace

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
  if (a.isZero()) return primitivePositive(b) * ZPoly(mpz_class(b.content()));
  if (b.isZero()) return primitivePositive(a) * ZPoly(mpz_class(a.content()));
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

  // Monomial fast path: gcd with c*q^k only needs the low degrees.
  if (a.isMonomial() || b.isMonomial())
    return monomial(cg, std::min(a.lowDegree(), b.lowDegree()));

  ZPoly u = primitivePositive(a);
  ZPoly v = primitivePositive(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.isZero()) {
    ZPoly r = pseudoRem(u, v);
    u = std::move(v);
    v = primitivePositive(r);
  }
  return primitivePositive(u) * ZPoly(std::move(cg));
}

std::string ZPoly::str() const {
  if (isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& ck = c_[k];
    if (ck == 0) continue;
    mpz_class mag = abs(ck);
    if (first) {
      if (ck < 0) out << "-";
      first = false;
    } else {
      out << (ck < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "q";
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw arithmetic_error("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.isZero()) {
    den_ = ZPoly(1);
    return;
  }
  ZPoly g = ZPoly::gcd(num_, den_);
  if (!g.isOne()) {
    num_ = num_.divExact(g);
    den_ = den_.divExact(g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::qPower(long k) {
  if (k >= 0) return RatFunc(ZPoly::monomial(1, static_cast<int>(k)));
  RatFunc r;
  r.num_ = ZPoly(1);
  r.den_ = ZPoly::monomial(1, static_cast<int>(-k));
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (isZero()) return o;
  if (o.isZero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  ZPoly g = ZPoly::gcd(den_, o.den_);
  if (g.isOne()) return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  ZPoly d1 = den_.divExact(g);
  ZPoly d2 = o.den_.divExact(g);
  return RatFunc(num_ * d2 + o.num_ * d1, d1 * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (isZero() || o.isZero()) return RatFunc();
  ZPoly g1 = ZPoly::gcd(num_, o.den_);
  ZPoly g2 = ZPoly::gcd(o.num_, den_);
  ZPoly n1 = g1.isOne() ? num_ : num_.divExact(g1);
  ZPoly d2 = g1.isOne() ? o.den_ : o.den_.divExact(g1);
  ZPoly n2 = g2.isOne() ? o.num_ : o.num_.divExact(g2);
  ZPoly d1 = g2.isOne() ? den_ : den_.divExact(g2);
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.isZero()) throw arithmetic_error("division by zero");
  return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
  if (isZero()) throw arithmetic_error("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long k) const {
  if (k == 0) return RatFunc(1);
  RatFunc base = k < 0 ? inverse() : *this;
  long e = k < 0 ? -k : k;
  RatFunc acc(1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string RatFunc::str() const {
  if (den_.isOne()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qcapelli
