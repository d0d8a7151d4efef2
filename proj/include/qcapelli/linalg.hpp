#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "qcapelli/ratfunc.hpp"

namespace Eigen {

template <>
struct NumTraits<qcapelli::RatFunc> {
  using Real = qcapelli::RatFunc;
  using NonInteger = qcapelli::RatFunc;
  using Nested = qcapelli::RatFunc;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64
  };
  static inline Real epsilon() { return qcapelli::RatFunc(); }
  static inline Real dummy_precision() { return qcapelli::RatFunc(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qcapelli {

using RatMat = Eigen::Matrix<RatFunc, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<RatFunc, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form over Q(q).  Pivots are chosen as the
/// first row with a nonzero entry in column order, so the result is
/// deterministic.  Returns the pivot columns in increasing order.
std::vector<int> rowReduce(RatMat& m);

/// Basis of the right kernel of m, returned as matrix columns (possibly 0 columns).
RatMat kernelBasis(const RatMat& m);

/// One solution of m x = b, or nullopt if the system is inconsistent.
std::optional<RatVec> solveLinear(const RatMat& m, const RatVec& b);

int rank(const RatMat& m);

}  // namespace qcapelli
