#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nilgen/allowable.hpp"
#include "nilgen/autgrp.hpp"

namespace nilgen {

inline constexpr std::uint64_t kDefaultMaxEnumeration = 100'000'000;

/// A group acting on the allowable subspaces of one step: generators as
/// matrices on L paired with their dual action matrices.
class GroupAction {
 public:
  GroupAction(const AllowableSpace& space, const std::vector<Matrix>& gens_on_l, const std::vector<Matrix>& rho);

  const AllowableSpace& space() const { return *space_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  const Matrix& gen(int k) const { return gens_[k]; }
  const Matrix& gen_inverse(int k) const { return inv_[k]; }
  const Matrix& dual(int k) const { return duals_[k]; }
  std::uint64_t apply(std::uint64_t idx, int k) const { return act_on_index(*space_, idx, packed_[k]); }

 private:
  const AllowableSpace* space_;
  std::vector<Matrix> gens_, inv_, duals_;
  std::vector<PackedAction> packed_;
};

struct OrbitResult {
  std::uint64_t rep_index = 0;  ///< smallest index in the orbit
  Subspace rep;
  BigInt orbit_size;
  /// Generators of the stabiliser of rep, as matrices on L.
  std::vector<Matrix> stab_gens;
};

/// Orbits of the group on all indices, with stabilisers of each
/// representative. The group order must be exact.
std::vector<OrbitResult> orbit_partition(const GroupAction& action, const BigInt& group_order);

/// One orbit, explored from `start` and held in a hash map; at most
/// `max_points` points are visited (CeilingExceeded beyond that).
class SingleOrbit {
 public:
  SingleOrbit(const GroupAction& action, std::uint64_t start, std::uint64_t max_points,
              std::optional<std::uint64_t> stop_at = std::nullopt);

  bool contains(std::uint64_t idx) const { return tree_.count(idx) > 0; }
  std::uint64_t size() const { return tree_.size(); }
  bool complete() const { return complete_; }
  /// Generator indices g_1..g_r with start * g_1 * ... * g_r = idx.
  std::vector<int> word(std::uint64_t idx) const;
  /// Stabiliser of start, as matrices on L; requires a complete orbit.
  std::vector<Matrix> stabiliser(const BigInt& group_order) const;

 private:
  const GroupAction* action_;
  std::uint64_t start_;
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint16_t>> tree_;
  bool complete_ = false;
};

struct Descendant {
  NilAlgebra algebra;
  AutGroup aut;
  Subspace rep;
  std::uint64_t rep_index = 0;
  int step = 0;
  BigInt orbit_size;
};

struct DescendOptions {
  std::uint64_t max_enumeration = kDefaultMaxEnumeration;
};

/// All immediate descendants of step s, one per orbit, in representative
/// index order. Empty when s exceeds dim N; CeilingExceeded when the
/// allowable count is above the ceiling.
std::vector<Descendant> immediate_descendants(const NilAlgebra& L, const AutGroup& autL, int s,
                                              const DescendOptions& opts = {}, const CoverData* cover = nullptr);

}  // namespace nilgen
