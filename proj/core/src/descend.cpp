#include "nilgen/descend.hpp"

#include <limits>
#include <random>

#include "nilgen/errors.hpp"
#include "nilgen/stab_chain.hpp"

namespace nilgen {

GroupAction::GroupAction(const AllowableSpace& space, const std::vector<Matrix>& gens_on_l,
                         const std::vector<Matrix>& rho)
    : space_(&space), gens_(gens_on_l) {
  if (gens_on_l.size() != rho.size()) throw DomainError("one action matrix per generator is required");
  if (gens_.size() > std::numeric_limits<std::uint16_t>::max()) throw DomainError("too many generators");
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    inv_.push_back(*inverse(gens_[k]));
    duals_.push_back(space.dual_action(rho[k]));
    packed_.emplace_back(duals_.back());
  }
}

namespace {

constexpr std::uint64_t kSeed = 0x6e696c67656e3031ULL;
constexpr int kRandomAttempts = 600;
constexpr std::uint64_t kFallbackOrbitLimit = 2'000'000;

/// Uniform-ish random group elements by product replacement, carried as
/// (matrix on L, dual action matrix) pairs.
class RandomElements {
 public:
  RandomElements(const GroupAction& a, std::uint64_t seed) : rng_(seed) {
    const int ng = a.num_gens();
    for (int i = 0; i < std::max(10, ng); ++i) slots_.push_back({a.gen(i % ng), a.dual(i % ng)});
    acc_ = slots_[0];
    for (int i = 0; i < 60; ++i) next();
  }

  std::pair<Matrix, Matrix> next() {
    std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
    std::size_t i = pick(rng_), j = pick(rng_);
    while (j == i) j = pick(rng_);
    if (rng_() & 1)
      slots_[i] = {slots_[i].first * slots_[j].first, slots_[i].second * slots_[j].second};
    else
      slots_[i] = {slots_[j].first * slots_[i].first, slots_[j].second * slots_[i].second};
    acc_ = {acc_.first * slots_[i].first, acc_.second * slots_[i].second};
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<std::pair<Matrix, Matrix>> slots_;
  std::pair<Matrix, Matrix> acc_;
};

/// Stabiliser of `root` from its Schreier tree. `parent(x)` returns the tree
/// edge (parent, generator) into x; the root maps to itself.
template <class ParentFn>
std::vector<Matrix> stabiliser_from_tree(const GroupAction& a, std::uint64_t root, const BigInt& orbit_size,
                                         const BigInt& group_order, ParentFn parent) {
  if (group_order % orbit_size != 0) throw ConsistencyError("orbit size does not divide the group order");
  const BigInt target = group_order / orbit_size;
  if (target == 1) return {};
  const int n = a.gen(0).rows(), p = a.gen(0).p();

  auto transversal_inverse = [&](std::uint64_t x) {
    Matrix r = Matrix::identity(p, n);
    while (x != root) {
      auto [par, k] = parent(x);
      r = r * a.gen_inverse(k);
      x = par;
    }
    return r;
  };
  auto transversal = [&](std::uint64_t x) {
    Matrix r = Matrix::identity(p, n);
    while (x != root) {
      auto [par, k] = parent(x);
      r = a.gen(k) * r;
      x = par;
    }
    return r;
  };

  StabChain sc(p, n);
  RandomElements rnd(a, kSeed ^ root);
  for (int attempt = 0; attempt < kRandomAttempts && sc.order() < target; ++attempt) {
    auto [g, dual] = rnd.next();
    std::uint64_t x = act_on_index(a.space(), root, PackedAction(dual));
    sc.add(g * transversal_inverse(x));
  }
  if (sc.order() < target) {
    // Every Schreier generator of the orbit.
    std::vector<std::uint64_t> pts{root};
    std::unordered_map<std::uint64_t, bool> seen{{root, true}};
    for (std::size_t h = 0; h < pts.size(); ++h) {
      if (pts.size() > kFallbackOrbitLimit) throw ConsistencyError("stabiliser fallback orbit too large");
      for (int k = 0; k < a.num_gens(); ++k) {
        std::uint64_t y = a.apply(pts[h], k);
        sc.add(transversal(pts[h]) * a.gen(k) * transversal_inverse(y));
        if (seen.emplace(y, true).second) pts.push_back(y);
      }
    }
    sc.complete();
  }
  if (sc.order() != target) throw ConsistencyError("stabiliser order does not match orbit-stabiliser prediction");
  return sc.strong_generators();
}

}  // namespace

std::vector<OrbitResult> orbit_partition(const GroupAction& action, const BigInt& group_order) {
  const std::uint64_t count = action.space().count();
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  if (count >= kNone) throw DomainError("dense orbit partition needs fewer than 2^32 points");
  std::vector<std::uint32_t> parent(count, kNone);
  std::vector<std::uint16_t> pgen(count, 0);
  std::vector<std::uint32_t> queue;
  std::vector<OrbitResult> out;
  std::uint64_t total = 0;

  for (std::uint64_t start = 0; start < count; ++start) {
    if (parent[start] != kNone) continue;
    parent[start] = static_cast<std::uint32_t>(start);
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint64_t x = queue[head];
      for (int k = 0; k < action.num_gens(); ++k) {
        std::uint64_t y = action.apply(x, k);
        if (parent[y] != kNone) continue;
        parent[y] = static_cast<std::uint32_t>(x);
        pgen[y] = static_cast<std::uint16_t>(k);
        queue.push_back(static_cast<std::uint32_t>(y));
      }
    }
    OrbitResult r;
    r.rep_index = start;
    r.orbit_size = queue.size();
    total += queue.size();
    out.push_back(std::move(r));
  }
  if (total != count) throw ConsistencyError("orbit sizes do not sum to the number of allowable subspaces");
  for (OrbitResult& r : out) {
    r.rep = action.space().subspace(r.rep_index);
    r.stab_gens = stabiliser_from_tree(action, r.rep_index, r.orbit_size, group_order, [&](std::uint64_t x) {
      return std::pair<std::uint64_t, int>{parent[x], pgen[x]};
    });
  }
  return out;
}

SingleOrbit::SingleOrbit(const GroupAction& action, std::uint64_t start, std::uint64_t max_points,
                         std::optional<std::uint64_t> stop_at)
    : action_(&action), start_(start) {
  std::vector<std::uint64_t> queue{start};
  tree_.emplace(start, std::pair<std::uint64_t, std::uint16_t>{start, 0});
  if (stop_at && *stop_at == start) return;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int k = 0; k < action.num_gens(); ++k) {
      std::uint64_t y = action.apply(queue[head], k);
      if (!tree_.emplace(y, std::pair<std::uint64_t, std::uint16_t>{queue[head], k}).second) continue;
      if (stop_at && y == *stop_at) return;
      if (tree_.size() > max_points)
        throw CeilingExceeded("orbit exceeds " + std::to_string(max_points) + " points", "orbit search");
      queue.push_back(y);
    }
  }
  complete_ = true;
}

std::vector<int> SingleOrbit::word(std::uint64_t idx) const {
  std::vector<int> w;
  while (idx != start_) {
    const auto& [par, k] = tree_.at(idx);
    w.push_back(k);
    idx = par;
  }
  return {w.rbegin(), w.rend()};
}

std::vector<Matrix> SingleOrbit::stabiliser(const BigInt& group_order) const {
  if (!complete_) throw DomainError("stabiliser needs the complete orbit");
  return stabiliser_from_tree(*action_, start_, BigInt(tree_.size()), group_order, [&](std::uint64_t x) {
    const auto& e = tree_.at(x);
    return std::pair<std::uint64_t, int>{e.first, e.second};
  });
}

std::vector<Descendant> immediate_descendants(const NilAlgebra& L, const AutGroup& autL, int s,
                                              const DescendOptions& opts, const CoverData* cover) {
  if (!autL.order) throw DomainError("immediate descendants need an exact automorphism group order");
  CoverData local;
  if (!cover) {
    local = compute_cover(L);
    cover = &local;
  }
  const CoverData& cd = *cover;
  if (s < 1 || s > cd.nucleus_dim()) return {};
  BigInt count = count_allowable(cd, s);
  if (count > opts.max_enumeration)
    throw CeilingExceeded("step " + std::to_string(s) + " has " + count.str() + " allowable subspaces, above the ceiling of " +
                              std::to_string(opts.max_enumeration) + "; use the reinterpretation path",
                          "dimension " + std::to_string(L.dim()) + " type " + type_symbol(L).to_string() + " step " +
                              std::to_string(s));
  AllowableSpace space(cd, s);
  std::vector<Matrix> rho = mult_representation(cd, autL.gens);
  GroupAction action(space, autL.gens, rho);
  std::vector<Descendant> out;
  for (OrbitResult& orb : orbit_partition(action, *autL.order)) {
    Quotient q = quotient_by(cd, orb.rep);
    Descendant d;
    d.aut = assemble_descendant_aut(autL, q.algebra, orb.stab_gens, orb.orbit_size);
    d.algebra = std::move(q.algebra);
    d.rep = std::move(orb.rep);
    d.rep_index = orb.rep_index;
    d.step = s;
    d.orbit_size = std::move(orb.orbit_size);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace nilgen
