#pragma once

#include <cstdint>
#include <vector>

#include "nilgen/cover.hpp"

namespace nilgen {

/// Exact number of allowable subspaces of step s:
/// [dim N, s]_p * p^(s (dim M - dim N)), and 0 outside 1 <= s <= dim N.
BigInt count_allowable(const CoverData& cd, int s);

/// The allowable subspaces of one step, indexed by [0, count).
///
/// J is handled through its annihilator W in the dual of M, written in
/// coordinates whose last dim M - dim N vectors span the annihilator of N.
/// J is allowable exactly when the RREF of W has all pivots among the first
/// dim N columns, so the indices are those of a SubspaceIndexer with that
/// pivot limit.
class AllowableSpace {
 public:
  AllowableSpace(const CoverData& cd, int s);

  int p() const { return p_; }
  int m() const { return m_; }
  int step() const { return s_; }
  std::uint64_t count() const { return indexer_.count(); }
  const SubspaceIndexer& indexer() const { return indexer_; }

  Subspace subspace(std::uint64_t idx) const;
  std::uint64_t index_of(const Subspace& J) const;
  /// The matrix acting on dual coordinates for rho acting on M.
  Matrix dual_action(const Matrix& rho) const;

 private:
  int p_, m_, s_;
  Matrix P_, Pinv_;
  SubspaceIndexer indexer_;
};

/// A dual action matrix prepared for the index kernel.
class PackedAction {
 public:
  PackedAction() = default;
  explicit PackedAction(const Matrix& dual);

  std::vector<std::uint64_t> bits;  // p = 2: row c as a mask
  Matrix bytes;                     // p > 2
};

/// Index of J*g from the index of J. Throws ConsistencyError when the
/// image is not allowable.
std::uint64_t act_on_index(const AllowableSpace& space, std::uint64_t idx, const PackedAction& g);

}  // namespace nilgen
