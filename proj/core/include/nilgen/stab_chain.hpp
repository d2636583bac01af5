#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nilgen/bigint.hpp"
#include "nilgen/matrix.hpp"

namespace nilgen {

/// Base and strong generating set for a group of invertible n x n matrices
/// over GF(p) acting on row vectors (Schreier-Sims).
///
/// Base points are standard basis vectors; transversals are stored as
/// explicit matrices. Suitable while p^n stays in the low millions.
class StabChain {
 public:
  StabChain(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }

  /// Sifts g and, if it is not yet a member, extends the chain.
  /// Returns whether the represented group grew.
  bool add(const Matrix& g);
  bool contains(const Matrix& g) const;
  /// Adds sifted Schreier generators until the chain is complete.
  void complete();

  /// Product of the basic orbit lengths: the order once complete, and a
  /// lower bound on the order of the generated group before that.
  BigInt order() const;
  const std::vector<Matrix>& strong_generators() const { return gens_; }
  int base_length() const { return static_cast<int>(levels_.size()); }

 private:
  struct Level {
    Vec point;
    std::vector<std::uint64_t> orbit;  // codes, position = transversal index
    std::unordered_map<std::uint64_t, int> where;
    std::vector<Matrix> u, uinv;
  };

  std::uint64_t code(std::span<const Elem> v) const;
  /// Residue after sifting and the level at which it stopped.
  std::pair<Matrix, int> sift(const Matrix& g) const;
  void extend_orbit(int level);

  int p_, n_;
  std::vector<Level> levels_;
  std::vector<Matrix> gens_;
  std::vector<int> gen_level_;  // generator fixes the base points before this level
};

/// Order of the group generated by `gens` (deterministic Schreier-Sims).
BigInt group_order(int p, int n, const std::vector<Matrix>& gens);

}  // namespace nilgen
