#pragma once

#include <map>
#include <vector>

#include "qcapelli/ratfunc.hpp"

namespace qcapelli {

/// Polynomial in x_1..x_n with RatFunc coefficients, stored as a map from
/// exponent vectors to coefficients.  Zero coefficients are never stored.
class SymPoly {
 public:
  using Expt = std::vector<int>;

  explicit SymPoly(int nvars) : nvars_(nvars) {}
  static SymPoly constant(int nvars, RatFunc c);
  static SymPoly variable(int nvars, int i);  // x_i, 1-based

  int nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  int totalDegree() const;
  const std::map<Expt, RatFunc>& terms() const { return terms_; }

  void add(const Expt& e, const RatFunc& c);

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly operator*(const RatFunc& c) const;
  bool operator==(const SymPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Substitute x_i := values[i-1].
  RatFunc evalAt(const std::vector<RatFunc>& values) const;

  /// Substitute x_i := q^{exps[i-1]}.  Throws on length mismatch.
  RatFunc evalAtQPowers(const std::vector<long>& exps) const;

  /// Substitute x_i := factors[i-1] * x_i (diagonal change of variables).
  SymPoly scaleVars(const std::vector<RatFunc>& factors) const;

  /// Apply a permutation to the variables: x_i -> x_{perm[i-1]} (1-based).
  SymPoly permuteVars(const std::vector<int>& perm) const;

  std::string str() const;

 private:
  int nvars_;
  std::map<Expt, RatFunc> terms_;
};

}  // namespace qcapelli
