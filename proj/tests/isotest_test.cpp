#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "nilgen/classify.hpp"
#include "nilgen/errors.hpp"
#include "nilgen/isotest.hpp"

namespace nilgen {
namespace {

using testing::filiform4;
using testing::free_class3_rank2;
using testing::heisenberg;
using testing::random_invertible;

NilAlgebra conjugate(const NilAlgebra& L, std::mt19937_64& rng) {
  Matrix g = random_invertible(L.p(), L.dim(), rng);
  return normalize(L.table().change_basis(g)).algebra;
}

const Catalog& catalog(int p) {
  static std::map<int, Catalog> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, classify(p, 6)).first;
  return it->second;
}

TEST(AreIsomorphic, SelfGivesIdentity) {
  IsoResult r = are_isomorphic(free_class3_rank2(3), free_class3_rank2(3));
  ASSERT_EQ(r.outcome, IsoOutcome::Isomorphic);
  EXPECT_TRUE(r.witness->is_identity());
}

TEST(AreIsomorphic, ConjugatedHeisenberg) {
  std::mt19937_64 rng(17);
  NilAlgebra H = heisenberg(2);
  NilAlgebra G = conjugate(H, rng);
  IsoResult r = are_isomorphic(H, G);
  ASSERT_EQ(r.outcome, IsoOutcome::Isomorphic);
  EXPECT_TRUE(verify_witness(H, G, *r.witness));
}

TEST(AreIsomorphic, TwoFiliformTypesInDimensionFiveDiffer) {
  std::vector<const CatalogEntry*> same;
  for (const CatalogEntry& e : catalog(2).at_dim(5))
    if (e.type.to_string() == "[2,1,1,1][1]") same.push_back(&e);
  ASSERT_EQ(same.size(), 2u);
  EXPECT_EQ(are_isomorphic(same[0]->algebra, same[1]->algebra).outcome, IsoOutcome::NotIsomorphic);
}

TEST(AreIsomorphic, CatalogEntriesArePairwiseDistinctAndRecognisedAfterConjugation) {
  std::mt19937_64 rng(23);
  for (int p : {2, 3}) {
    IsoTester tester;
    for (int dim = 4; dim <= 6; ++dim) {
      const auto& entries = catalog(p).at_dim(dim);
      for (std::size_t i = 0; i < entries.size(); ++i) {
        NilAlgebra c = conjugate(entries[i].algebra, rng);
        IsoResult r = tester.test(entries[i].algebra, c);
        ASSERT_EQ(r.outcome, IsoOutcome::Isomorphic) << entries[i].id;
        EXPECT_TRUE(verify_witness(entries[i].algebra, c, *r.witness));
        for (std::size_t j = i + 1; j < entries.size(); ++j)
          if (entries[i].type == entries[j].type)
            EXPECT_EQ(tester.test(entries[j].algebra, c).outcome, IsoOutcome::NotIsomorphic)
                << entries[i].id << " " << entries[j].id;
      }
    }
  }
}

TEST(Fingerprint, InvariantUnderConjugation) {
  std::mt19937_64 rng(29);
  for (const CatalogEntry& e : catalog(3).at_dim(6)) EXPECT_EQ(fingerprint(e.algebra), fingerprint(conjugate(e.algebra, rng)));
}

TEST(AutomorphismGroup, AgreesWithCatalogOrders) {
  for (int p : {2, 3}) {
    IsoTester tester;
    for (int dim = 1; dim <= 6; ++dim)
      for (const CatalogEntry& e : catalog(p).at_dim(dim)) {
        AutGroup g = tester.automorphism_group(e.algebra);
        EXPECT_EQ(*g.order, *e.aut.order) << e.id;
      }
  }
}

TEST(AutomorphismGroup, OfAConjugateHasTheSameOrder) {
  std::mt19937_64 rng(31);
  NilAlgebra F = filiform4(3);
  EXPECT_EQ(*automorphism_group(conjugate(F, rng)).order, *automorphism_group(F).order);
}

GroupAction heisenberg_action(const CoverData& cd, const AllowableSpace& space, bool trivial) {
  auto d = immediate_descendants(make_abelian(2, 2), gl_generators(2, 2), 1);
  std::vector<Matrix> gens = trivial ? std::vector<Matrix>{Matrix::identity(2, 3)} : d[0].aut.gens;
  return GroupAction(space, gens, mult_representation(cd, gens));
}

TEST(OrbitMembership, Examples) {
  CoverData cd = compute_cover(heisenberg(2));
  AllowableSpace space(cd, 1);
  ASSERT_EQ(space.count(), 3u);
  GroupAction act = heisenberg_action(cd, space, false);
  EXPECT_EQ(orbit_membership(act, 1, 1, 100), std::vector<int>{});
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 3; ++b) {
      auto w = orbit_membership(act, a, b, 100);
      ASSERT_TRUE(w);
      std::uint64_t x = a;
      for (int k : *w) x = act.apply(x, k);
      EXPECT_EQ(x, b);
    }
  GroupAction none = heisenberg_action(cd, space, true);
  EXPECT_FALSE(orbit_membership(none, 0, 1, 100));
}

TEST(IsoTester, TinyOrbitLimitGivesUndecided) {
  std::mt19937_64 rng(37);
  const CatalogEntry* target = nullptr;
  for (const CatalogEntry& e : catalog(3).at_dim(6))
    if (e.type.to_string() == "[2,1,1,1,1][1]") target = &e;
  ASSERT_NE(target, nullptr);
  IsoTester tester(IsoOptions{1});
  IsoResult r = tester.test(target->algebra, conjugate(target->algebra, rng));
  EXPECT_EQ(r.outcome, IsoOutcome::Undecided);
}

TEST(AreIsomorphic, DifferentFieldsRejected) {
  EXPECT_THROW(are_isomorphic(heisenberg(2), heisenberg(3)), DomainError);
}

}  // namespace
}  // namespace nilgen
