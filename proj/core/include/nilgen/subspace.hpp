#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nilgen/bigint.hpp"
#include "nilgen/matrix.hpp"

namespace nilgen {

/// A subspace of GF(p)^n held by its RREF basis.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of GF(p)^ambient.
  Subspace(int p, int ambient);
  /// Row space of `span`.
  static Subspace from_span(const Matrix& span);
  static Subspace full(int p, int ambient);

  int p() const { return p_; }
  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// Reduce v against the basis; zero iff v lies in the subspace.
  Vec reduce(std::span<const Elem> v) const;

  /// Canonical bytes: p, ambient, rows, then RREF entries row-major
  /// (for p = 2 each row is bit-packed, most significant bit first).
  std::string key() const;

  bool operator==(const Subspace& o) const {
    return p_ == o.p_ && ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  int p_ = 2;
  int ambient_ = 0;
  Matrix basis_;
  std::vector<int> pivots_;
};

/// Right null space {v : m v^T = 0}.
Subspace nullspace(const Matrix& m);

/// Number of k-dimensional subspaces of GF(q)^m.
BigInt gaussian_binomial(int m, int k, int q);

/// Bijection between [0, count) and the k-dimensional subspaces of
/// GF(p)^m whose RREF pivots all lie in the first `pivot_limit` columns.
///
/// Order: pivot sets lexicographically, then free entries (row-major, the
/// first free position most significant) as a base-p number. With
/// pivot_limit = m this enumerates every k-subspace.
class SubspaceIndexer {
 public:
  SubspaceIndexer(int m, int k, int p, int pivot_limit = -1);

  int m() const { return m_; }
  int k() const { return k_; }
  int p() const { return p_; }
  int pivot_limit() const { return a_; }
  std::uint64_t count() const { return count_; }

  /// RREF rows (k x m, row-major) written to `out`.
  void unrank(std::uint64_t idx, Elem* out) const;
  /// Inverse of unrank; `rref` must satisfy the pivot constraint.
  std::uint64_t rank(const Elem* rref) const;
  std::uint64_t rank_with_pivots(const Elem* rref, const int* pivots) const;

  /// p = 2 with m <= 64: rows as bit masks, column c in bit c.
  void unrank_bits(std::uint64_t idx, std::uint64_t* rows) const;
  std::uint64_t rank_bits(const std::uint64_t* rows) const;

  Matrix unrank(std::uint64_t idx) const;
  std::uint64_t rank(const Matrix& rref) const;

 private:
  int free_in_row(int r, int c) const { return m_ - 1 - c - (k_ - 1 - r); }

  int m_, k_, p_, a_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> pow_;     // p^e
  std::vector<std::uint64_t> weight_;  // W(r, c), (k+1) x (m+1)
  std::vector<std::uint64_t> prefix_;  // S(r, c) = sum_{x<c} p^{e_r(x)} W(r+1, x+1)
};

/// Every k-subspace of GF(p)^n once, in SubspaceIndexer order.
void for_each_subspace(int n, int k, int p, const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> enumerate_subspaces(int n, int k, int p);

}  // namespace nilgen
