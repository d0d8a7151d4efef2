#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qcapelli/linalg.hpp"

namespace qcapelli {

enum class FamilyKind { AI, AII, Diagonal };

std::string familyName(FamilyKind k);
std::optional<FamilyKind> parseFamilyKind(const std::string& s);

/// Partition: weakly decreasing nonnegative integers, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);
  static Partition parse(const std::string& csv);

  const std::vector<long>& parts() const { return parts_; }
  int numParts() const { return static_cast<int>(parts_.size()); }
  long size() const;                 // |lambda|
  long part(int i) const;            // 1-based, 0 beyond the last part
  Partition operator+(const Partition& o) const;  // componentwise
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }
  std::string str() const;

  /// All partitions with size <= maxSize and at most maxParts parts,
  /// in a fixed deterministic order (by size, then lexicographic).
  static std::vector<Partition> all(long maxSize, int maxParts);
  /// All partitions of exactly the given size with at most maxParts parts.
  static std::vector<Partition> ofSize(long exactSize, int maxParts);

 private:
  std::vector<long> parts_;
};

/// Ambient weight in the epsilon basis.
using WeightVec = Eigen::VectorXi;

/// All constants and index conventions of one symmetric-pair family.
/// Immutable after build_family.
struct FamilyDescriptor {
  FamilyKind kind;
  int n = 0;  // restricted rank
  int N = 0;  // ambient size: n for AI, 2n for AII and Diagonal

  RatFunc gammaX;  // x_{ij} = gammaX * x_{ji} for i<j
  RatFunc gammaD;  // d_{ij} = gammaD * d_{ji} for i<j
  std::set<std::pair<int, int>> zeroSet;                 // S: vanishing generator indices
  std::vector<std::pair<int, int>> canonicalXIndices;    // PBW generator order
  int mExponent = 0;
  RatFunc aParam, gParam;

  RatMat R;  // N^2 x N^2, row (i,j), col (k,l) entry r^{ij}_{kl}
  RatMat J;  // N x N

  bool isCanonical(int i, int j) const;
  /// Rank of a canonical pair in the PBW order, -1 otherwise.
  int canonicalRank(int i, int j) const;

  /// Substitution data for a generator index pair: nullopt when (i,j) is
  /// canonical; otherwise either "zero" or a scalar multiple of the
  /// transposed pair.  `forD` selects the d-generator scalar.
  struct Subst {
    bool zero;
    RatFunc coeff;  // meaningful when !zero: g_{ij} = coeff * g_{ji}
  };
  std::optional<Subst> substitution(int i, int j, bool forD) const;

  /// Subscripts of the E_i/F_i generators (the diagonal family omits i = n).
  std::vector<int> efIndices() const;

  /// d-generator scaling exponent: s, except s-n for s > n in the diagonal family.
  int sHat(int s) const;

  /// Diagonal family splits the ambient index range into two blocks.
  int blockOf(int i) const { return (kind == FamilyKind::Diagonal && i > n) ? 2 : 1; }

  /// Ambient weight of 2*lambda.
  WeightVec weight2Lambda(const Partition& lambda) const;
  /// Ambient weight of 2*epsilon^Sigma_i.
  WeightVec epsSigma2Ambient(int i) const;

  WeightVec alphaWeight(int i) const;  // alpha_i = eps_i - eps_{i+1}

  const RatFunc& rEntry(int i, int j, int k, int l) const;
};

FamilyDescriptor buildFamily(FamilyKind kind, int n);

/// Entrywise check of R J1 R^{t1} J2 = J2 R^{t1} J1 R; returns human-readable
/// violations (empty iff the equation holds).
std::vector<std::string> checkReflectionEquation(const FamilyDescriptor& fam);

/// Transposes in one tensor slot: (R^{t1})^{ij}_{kl} = r^{kj}_{il} and
/// (R^{t2})^{ij}_{kl} = r^{il}_{kj}.
RatMat transposeSlot1(const RatMat& r, int N);
RatMat transposeSlot2(const RatMat& r, int N);

}  // namespace qcapelli
