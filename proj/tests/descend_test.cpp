#include <gtest/gtest.h>

#include <chrono>
#include <map>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "nilgen/descend.hpp"
#include "nilgen/errors.hpp"
#include "nilgen/stab_chain.hpp"

namespace nilgen {
namespace {

using testing::filiform4;
using testing::free_class3_rank2;
using testing::heisenberg;
using testing::heisenberg_plus_line;
using testing::random_invertible;

TEST(CountAllowable, LargeAbelianFamilies) {
  CoverData six = compute_cover(make_abelian(2, 6));
  CoverData seven = compute_cover(make_abelian(2, 7));
  auto t0 = std::chrono::steady_clock::now();
  BigInt a = count_allowable(six, 2), b = count_allowable(seven, 2);
  auto dt = std::chrono::steady_clock::now() - t0;
  EXPECT_EQ(a, BigInt(178940587));
  EXPECT_EQ(b, BigInt(733006703275LL));
  EXPECT_LT(std::chrono::duration<double>(dt).count(), 1e-3);
}

TEST(CountAllowable, SmallCases) {
  EXPECT_EQ(count_allowable(compute_cover(make_abelian(2, 2)), 1), 1);
  CoverData h = compute_cover(heisenberg(2));
  EXPECT_EQ(count_allowable(h, 1), 3);
  EXPECT_EQ(count_allowable(h, 3), 0);
  EXPECT_EQ(count_allowable(compute_cover(make_abelian(2, 3)), 1), 7);
}

// Every allowable subspace of one step, found by filtering all subspaces.
std::set<std::string> brute_allowable(const CoverData& cd, int s) {
  std::set<std::string> keys;
  for (const Subspace& J : enumerate_subspaces(cd.m(), cd.m() - s, cd.table.p()))
    if (is_allowable(cd, J)) keys.insert(J.key());
  return keys;
}

TEST(AllowableSpace, IndexingMatchesBruteForce) {
  for (int p : {2, 3})
    for (const NilAlgebra& L : {heisenberg(p), heisenberg_plus_line(p), filiform4(p), make_abelian(p, 3)}) {
      CoverData cd = compute_cover(L);
      for (int s = 1; s <= cd.nucleus_dim(); ++s) {
        AllowableSpace space(cd, s);
        auto expect = brute_allowable(cd, s);
        EXPECT_EQ(BigInt(space.count()), count_allowable(cd, s));
        ASSERT_EQ(space.count(), expect.size());
        std::set<std::string> got;
        for (std::uint64_t i = 0; i < space.count(); ++i) {
          Subspace J = space.subspace(i);
          EXPECT_TRUE(is_allowable(cd, J));
          EXPECT_EQ(space.index_of(J), i);
          got.insert(J.key());
        }
        EXPECT_EQ(got, expect);
      }
    }
}

TEST(AllowableSpace, AbelianFourOverF3) {
  CoverData cd = compute_cover(make_abelian(3, 4));
  AllowableSpace space(cd, 2);
  EXPECT_EQ(BigInt(space.count()), count_allowable(cd, 2));
  EXPECT_EQ(BigInt(space.count()), gaussian_binomial(6, 2, 3));
}

Subspace image(const Subspace& J, const Matrix& rho) {
  return Subspace::from_span(J.basis() * rho);
}

TEST(AllowableSpace, DualActionIsAHomomorphismAndMatchesIndices) {
  std::mt19937_64 rng(3);
  for (int p : {2, 3}) {
    CoverData cd = compute_cover(make_abelian(p, 3));
    for (int s = 1; s <= 2; ++s) {
      AllowableSpace space(cd, s);
      for (int t = 0; t < 5; ++t) {
        Matrix a = random_invertible(p, 3, rng), b = random_invertible(p, 3, rng);
        auto rho = mult_representation(cd, {a, b, a * b});
        EXPECT_EQ(space.dual_action(rho[0]) * space.dual_action(rho[1]), space.dual_action(rho[2]));
        PackedAction pa(space.dual_action(rho[0]));
        for (std::uint64_t i = 0; i < space.count(); ++i)
          EXPECT_EQ(act_on_index(space, i, pa), space.index_of(image(space.subspace(i), rho[0])));
      }
    }
  }
}

GroupAction action_for(const AllowableSpace& space, const CoverData& cd, const std::vector<Matrix>& gens) {
  return GroupAction(space, gens, mult_representation(cd, gens));
}

// Orbits by closure under the generators, as sets of indices.
std::set<std::set<std::uint64_t>> closure_orbits(const GroupAction& act) {
  std::set<std::set<std::uint64_t>> out;
  std::vector<bool> seen(act.space().count(), false);
  for (std::uint64_t i = 0; i < act.space().count(); ++i) {
    if (seen[i]) continue;
    std::set<std::uint64_t> orbit{i};
    std::vector<std::uint64_t> queue{i};
    seen[i] = true;
    while (!queue.empty()) {
      std::uint64_t x = queue.back();
      queue.pop_back();
      for (int k = 0; k < act.num_gens(); ++k) {
        std::uint64_t y = act.apply(x, k);
        if (!seen[y]) {
          seen[y] = true;
          orbit.insert(y);
          queue.push_back(y);
        }
      }
    }
    out.insert(orbit);
  }
  return out;
}

TEST(OrbitPartition, Examples) {
  NilAlgebra H = heisenberg(2);
  auto heis = immediate_descendants(make_abelian(2, 2), gl_generators(2, 2), 1);
  CoverData hc = compute_cover(H);
  AllowableSpace hs(hc, 1);
  auto orbits = orbit_partition(action_for(hs, hc, heis[0].aut.gens), BigInt(24));
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].orbit_size, 3);

  CoverData ac = compute_cover(make_abelian(2, 3));
  AllowableSpace as(ac, 1);
  auto a_orbits = orbit_partition(action_for(as, ac, gl_generators(2, 3).gens), BigInt(168));
  ASSERT_EQ(a_orbits.size(), 1u);
  EXPECT_EQ(a_orbits[0].orbit_size, 7);

  auto trivial = orbit_partition(action_for(as, ac, {Matrix::identity(2, 3)}), BigInt(1));
  EXPECT_EQ(trivial.size(), 7u);
  for (const auto& o : trivial) EXPECT_EQ(o.orbit_size, 1);
}

TEST(OrbitPartition, AccountingAndStabilisers) {
  for (int p : {2, 3}) {
    CoverData cd = compute_cover(make_abelian(p, 4));
    AutGroup gl = gl_generators(p, 4);
    for (int s = 1; s <= 3; ++s) {
      AllowableSpace space(cd, s);
      GroupAction act = action_for(space, cd, gl.gens);
      auto orbits = orbit_partition(act, *gl.order);
      auto expect = closure_orbits(act);
      ASSERT_EQ(orbits.size(), expect.size());
      BigInt total = 0;
      for (const OrbitResult& o : orbits) {
        total += o.orbit_size;
        EXPECT_EQ(space.index_of(o.rep), o.rep_index);
        // The representative is the smallest index of its orbit.
        bool found = false;
        for (const auto& e : expect)
          if (*e.begin() == o.rep_index) {
            found = true;
            EXPECT_EQ(BigInt(e.size()), o.orbit_size);
          }
        EXPECT_TRUE(found);
        // Stabiliser generators fix the representative and have the right order.
        auto rho = mult_representation(cd, o.stab_gens);
        for (const Matrix& r : rho) EXPECT_EQ(act_on_index(space, o.rep_index, PackedAction(space.dual_action(r))), o.rep_index);
        EXPECT_EQ(group_order(p, 4, o.stab_gens) * o.orbit_size, *gl.order);
      }
      EXPECT_EQ(total, BigInt(space.count()));
    }
  }
}

TEST(SingleOrbit, WordsReachTheirPoints) {
  CoverData cd = compute_cover(make_abelian(3, 3));
  AllowableSpace space(cd, 2);
  GroupAction act = action_for(space, cd, gl_generators(3, 3).gens);
  SingleOrbit orbit(act, 0, 1'000'000);
  EXPECT_TRUE(orbit.complete());
  EXPECT_EQ(orbit.size(), space.count());
  for (std::uint64_t i = 0; i < space.count(); i += 7) {
    std::uint64_t x = 0;
    for (int k : orbit.word(i)) x = act.apply(x, k);
    EXPECT_EQ(x, i);
  }
  EXPECT_THROW(SingleOrbit(act, 0, 5), CeilingExceeded);
}

TEST(ImmediateDescendants, Examples) {
  auto a2 = immediate_descendants(make_abelian(2, 2), gl_generators(2, 2), 1);
  ASSERT_EQ(a2.size(), 1u);
  EXPECT_EQ(type_symbol(a2[0].algebra).to_string(), "[2,1][1]");
  EXPECT_EQ(*a2[0].aut.order, 24);

  auto a5 = immediate_descendants(make_abelian(2, 5), gl_generators(2, 5), 1);
  ASSERT_EQ(a5.size(), 2u);
  std::set<std::string> types;
  for (const auto& d : a5) types.insert(type_symbol(d.algebra).to_string());
  EXPECT_EQ(types, (std::set<std::string>{"[5,1][4]", "[5,1][2]"}));

  auto h2 = immediate_descendants(heisenberg(2), a2[0].aut, 2);
  ASSERT_EQ(h2.size(), 1u);
  EXPECT_EQ(h2[0].algebra.dim(), 5);
  EXPECT_EQ(type_symbol(h2[0].algebra).to_string(), "[2,1,2][2]");
  EXPECT_TRUE(immediate_descendants(heisenberg(2), a2[0].aut, 3).empty());
}

TEST(ImmediateDescendants, DescendantsAreValidWithCorrectTopQuotient) {
  for (int p : {2, 3}) {
    auto h = immediate_descendants(make_abelian(p, 2), gl_generators(p, 2), 1)[0];
    for (int s = 1; s <= 2; ++s)
      for (const Descendant& d : immediate_descendants(h.algebra, h.aut, s)) {
        EXPECT_TRUE(validate(d.algebra));
        EXPECT_EQ(top_quotient(d.algebra), h.algebra);
        EXPECT_EQ(d.algebra.nilpotency_class(), 3);
        EXPECT_EQ(group_order(p, d.algebra.dim(), d.aut.gens), *d.aut.order);
        // |Aut K| |orbit| = |Aut L| p^(d l).
        const int l = d.algebra.dim() - h.algebra.dim();
        EXPECT_EQ(*d.aut.order * d.orbit_size, *h.aut.order * ipow(p, 2 * l));
      }
  }
}

TEST(ImmediateDescendants, CeilingIsEnforcedBeforeWork) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    immediate_descendants(make_abelian(2, 6), gl_generators(2, 6), 2);
    FAIL() << "expected CeilingExceeded";
  } catch (const CeilingExceeded& e) {
    EXPECT_NE(std::string(e.job()).find("step 2"), std::string::npos);
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 1.0);
}

TEST(BruteForceOracle, SmallDimensionsOverF2) {
  std::vector<int> counts;
  for (int n = 1; n <= 4; ++n) counts.push_back(testing::F2TableOracle(n).count_classes());
  EXPECT_EQ(counts, (std::vector<int>{1, 1, 2, 3}));
}

}  // namespace
}  // namespace nilgen
