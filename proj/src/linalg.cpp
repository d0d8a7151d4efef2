#include "qcapelli/linalg.hpp"

namespace qcapelli {

std::vector<int> rowReduce(RatMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (!m(r, col).isZero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    RatFunc inv = m(row, col).inverse();
    m(row, col) = RatFunc(1);
    for (Eigen::Index c = col + 1; c < cols; ++c)
      if (!m(row, c).isZero()) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || m(r, col).isZero()) continue;
      RatFunc f = m(r, col);
      m(r, col) = RatFunc();
      for (Eigen::Index c = col + 1; c < cols; ++c)
        if (!m(row, c).isZero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

RatMat kernelBasis(const RatMat& m) {
  RatMat r = m;
  std::vector<int> pivots = rowReduce(r);
  const Eigen::Index cols = m.cols();
  std::vector<bool> isPivot(cols, false);
  for (int p : pivots) isPivot[p] = true;
  std::vector<int> freeCols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!isPivot[c]) freeCols.push_back(static_cast<int>(c));
  RatMat basis(cols, static_cast<Eigen::Index>(freeCols.size()));
  basis.setConstant(RatFunc());
  for (size_t k = 0; k < freeCols.size(); ++k) {
    int fc = freeCols[k];
    basis(fc, static_cast<Eigen::Index>(k)) = RatFunc(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      basis(pivots[i], static_cast<Eigen::Index>(k)) = -r(static_cast<Eigen::Index>(i), fc);
  }
  return basis;
}

std::optional<RatVec> solveLinear(const RatMat& m, const RatVec& b) {
  RatMat aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  std::vector<int> pivots = rowReduce(aug);
  if (!pivots.empty() && pivots.back() == static_cast<int>(m.cols()))
    return std::nullopt;  // pivot in the augmented column: inconsistent
  RatVec x(m.cols());
  x.setConstant(RatFunc());
  for (size_t i = 0; i < pivots.size(); ++i)
    x(pivots[i]) = aug(static_cast<Eigen::Index>(i), m.cols());
  return x;
}

int rank(const RatMat& m) {
  RatMat r = m;
  return static_cast<int>(rowReduce(r).size());
}

}  // namespace qcapelli
