#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nilgen/matrix.hpp"
#include "nilgen/subspace.hpp"

namespace nilgen {

struct Term {
  int index;
  Elem coeff;
  bool operator==(const Term&) const = default;
};

/// Alternating structure constants on GF(p)^n, stored sparsely for i < j.
///
/// [b_j, b_i] = -[b_i, b_j] and [b_i, b_i] = 0 are implied, so the bilinear
/// extension is alternating in every characteristic.
class LieTable {
 public:
  LieTable() = default;
  LieTable(int p, int dim);

  int p() const { return p_; }
  int dim() const { return n_; }

  /// Terms of [b_i, b_j] for i < j; empty means zero.
  const std::vector<Term>& terms(int i, int j) const { return pairs_[i * n_ + j]; }
  /// Sets [b_i, b_j]; i > j stores the negation, i == j is rejected.
  void set(int i, int j, std::vector<Term> terms);
  void set(int i, int j, std::span<const Elem> value);

  Vec product(int i, int j) const;
  /// Adds coeff * [b_i, b_j] into acc.
  void add_product(int i, int j, Elem coeff, Vec& acc) const;
  Vec bracket(std::span<const Elem> x, std::span<const Elem> y) const;
  /// Matrix of x -> [x, b_j].
  Matrix right_ad(int j) const;

  /// First basis triple i < j < k on which Jacobi fails.
  std::optional<std::array<int, 3>> jacobi_violation() const;
  /// gamma_1 = L, gamma_{k+1} = [gamma_k, L], stopping once a term repeats
  /// (the last entry is 0 exactly when the table is nilpotent).
  std::vector<Subspace> lower_central_series() const;
  Subspace center() const;

  /// The table in a new basis; rows of `basis` are the new basis vectors
  /// in current coordinates.
  LieTable change_basis(const Matrix& basis) const;
  /// Same coefficients lifted to 0..p-1 and read modulo q.
  LieTable with_modulus(int q) const;

  bool operator==(const LieTable& o) const = default;

 private:
  int p_ = 2;
  int n_ = 0;
  std::vector<std::vector<Term>> pairs_;  // n x n, only i < j used
};

}  // namespace nilgen
