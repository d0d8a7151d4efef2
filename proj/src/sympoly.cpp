#include "qcapelli/sympoly.hpp"

#include <numeric>
#include <sstream>

namespace qcapelli {

SymPoly SymPoly::constant(int nvars, RatFunc c) {
  SymPoly p(nvars);
  p.add(Expt(nvars, 0), c);
  return p;
}

SymPoly SymPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw arithmetic_error("SymPoly::variable: index out of range");
  SymPoly p(nvars);
  Expt e(nvars, 0);
  e[i - 1] = 1;
  p.add(e, RatFunc(1));
  return p;
}

int SymPoly::totalDegree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void SymPoly::add(const Expt& e, const RatFunc& c) {
  if (c.isZero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  SymPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
  SymPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  SymPoly r(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Expt e(nvars_);
      for (int k = 0; k < nvars_; ++k) e[k] = e1[k] + e2[k];
      r.add(e, c1 * c2);
    }
  }
  return r;
}

SymPoly SymPoly::operator*(const RatFunc& c) const {
  SymPoly r(nvars_);
  for (const auto& [e, c0] : terms_) r.add(e, c0 * c);
  return r;
}

RatFunc SymPoly::evalAt(const std::vector<RatFunc>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw arithmetic_error("SymPoly::evalAt: wrong number of values");
  RatFunc acc;
  for (const auto& [e, c] : terms_) {
    RatFunc term = c;
    for (int k = 0; k < nvars_; ++k)
      if (e[k] != 0) term *= values[k].pow(e[k]);
    acc += term;
  }
  return acc;
}

RatFunc SymPoly::evalAtQPowers(const std::vector<long>& exps) const {
  if (static_cast<int>(exps.size()) != nvars_)
    throw arithmetic_error("SymPoly::evalAtQPowers: wrong number of exponents");
  RatFunc acc;
  for (const auto& [e, c] : terms_) {
    long qexp = 0;
    for (int k = 0; k < nvars_; ++k) qexp += static_cast<long>(e[k]) * exps[k];
    acc += c * RatFunc::qPower(qexp);
  }
  return acc;
}

SymPoly SymPoly::scaleVars(const std::vector<RatFunc>& factors) const {
  if (static_cast<int>(factors.size()) != nvars_)
    throw arithmetic_error("SymPoly::scaleVars: wrong number of factors");
  SymPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    RatFunc scaled = c;
    for (int k = 0; k < nvars_; ++k)
      if (e[k] != 0) scaled *= factors[k].pow(e[k]);
    r.add(e, scaled);
  }
  return r;
}

SymPoly SymPoly::permuteVars(const std::vector<int>& perm) const {
  SymPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Expt pe(nvars_, 0);
    for (int k = 0; k < nvars_; ++k) pe[perm[k] - 1] = e[k];
    r.add(pe, c);
  }
  return r;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string cs = c.str();
    bool needParen = cs.find(' ') != std::string::npos && cs.front() != '(';
    if (needParen)
      out << "(" << cs << ")";
    else
      out << cs;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      out << "*x" << (k + 1);
      if (e[k] != 1) out << "^" << e[k];
    }
  }
  return out.str();
}

}  // namespace qcapelli
