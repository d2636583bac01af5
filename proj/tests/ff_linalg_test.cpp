#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "nilgen/errors.hpp"
#include "nilgen/subspace.hpp"

namespace nilgen {
namespace {

using testing::random_vec;

TEST(Rref, IdentityIsFixed) {
  Matrix id = Matrix::identity(2, 3);
  auto r = rref(id);
  EXPECT_EQ(r.reduced, id);
  EXPECT_EQ(r.rank, 3);
  EXPECT_EQ(r.pivots, (std::vector<int>{0, 1, 2}));
}

TEST(Rref, DuplicatedRowOverF2) {
  auto r = rref(Matrix(2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(r.reduced, Matrix(2, {{1, 1}}));
  EXPECT_EQ(r.rank, 1);
  EXPECT_EQ(r.pivots, std::vector<int>{0});
}

TEST(Rref, DependentRowsOverF3) {
  // det [[2,1],[1,2]] = 3 = 0 in GF(3): the second row is twice the first.
  auto r = rref(Matrix(3, {{2, 1}, {1, 2}}));
  EXPECT_EQ(r.rank, 1);
  EXPECT_EQ(r.reduced, Matrix(3, {{1, 2}}));
  EXPECT_EQ(rref(Matrix(3, {{2, 1}, {1, 1}})).reduced, Matrix::identity(3, 2));
}

TEST(Rref, PackedF2AgreesWithRowSpanAcrossWordBoundary) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(2, 6, 130);
    for (int r = 0; r < 6; ++r) {
      Vec v = random_vec(2, 130, rng);
      std::copy(v.begin(), v.end(), m.row(r).begin());
    }
    auto red = rref(m);
    // Every original row reduces to zero against the echelon basis.
    Subspace s = Subspace::from_span(red.reduced);
    for (int r = 0; r < 6; ++r) EXPECT_TRUE(s.contains(m.row(r)));
    EXPECT_EQ(rref(red.reduced).reduced, red.reduced);
  }
}

class RrefProperty : public ::testing::TestWithParam<int> {};

TEST_P(RrefProperty, IdempotentAndRankNullity) {
  const int p = GetParam();
  std::mt19937_64 rng(p * 1000 + 3);
  std::uniform_int_distribution<int> shape(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = shape(rng), cols = shape(rng);
    Matrix m(p, rows, cols);
    for (int r = 0; r < rows; ++r) {
      Vec v = random_vec(p, cols, rng);
      if (trial % 3 == 0 && r > 0) v = m.row_vec(r - 1);
      std::copy(v.begin(), v.end(), m.row(r).begin());
    }
    auto red = rref(m);
    EXPECT_EQ(rref(red.reduced).reduced, red.reduced);
    Subspace ns = nullspace(m);
    EXPECT_EQ(red.rank + ns.dim(), cols);
    for (int r = 0; r < ns.dim(); ++r) EXPECT_TRUE(is_zero(vec_mul(ns.basis().row(r), m.transpose())));
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, RrefProperty, ::testing::Values(2, 3, 5, 7));

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int p : {2, 3, 5}) {
    Matrix a = testing::random_invertible(p, 5, rng);
    EXPECT_TRUE((a * *inverse(a)).is_identity());
  }
  EXPECT_FALSE(inverse(Matrix(2, {{1, 1}, {1, 1}})));
}

TEST(Nullspace, Examples) {
  EXPECT_EQ(nullspace(Matrix(2, 2, 2)).dim(), 2);
  EXPECT_EQ(nullspace(Matrix::identity(5, 3)).dim(), 0);
  Subspace ns = nullspace(Matrix(2, {{1, 1, 0}}));
  EXPECT_EQ(ns.dim(), 2);
  // Brute force over all 8 vectors.
  int members = 0;
  for (int x = 0; x < 8; ++x) {
    Vec v{Elem(x & 1), Elem(x >> 1 & 1), Elem(x >> 2 & 1)};
    bool kernel = ((v[0] + v[1]) % 2) == 0;
    EXPECT_EQ(ns.contains(v), kernel);
    members += kernel;
  }
  EXPECT_EQ(members, 4);
  EXPECT_TRUE(ns.contains(Vec{1, 1, 0}));
  EXPECT_TRUE(ns.contains(Vec{0, 0, 1}));
}

TEST(GaussianBinomial, Values) {
  EXPECT_EQ(gaussian_binomial(2, 1, 2), 3);
  EXPECT_EQ(gaussian_binomial(3, 2, 2), 7);
  EXPECT_EQ(gaussian_binomial(4, 2, 3), 130);
  EXPECT_EQ(gaussian_binomial(15, 13, 2), 178940587);
  EXPECT_EQ(gaussian_binomial(21, 19, 2), BigInt("733006703275"));
  EXPECT_EQ(gaussian_binomial(5, 0, 7), 1);
  EXPECT_THROW(gaussian_binomial(3, 4, 2), DomainError);
  EXPECT_THROW(gaussian_binomial(3, -1, 2), DomainError);
}

TEST(EnumerateSubspaces, LinesInThePlane) {
  auto subs = enumerate_subspaces(2, 1, 2);
  ASSERT_EQ(subs.size(), 3u);
  std::set<std::string> keys;
  for (const auto& s : subs) keys.insert(s.key());
  for (Vec v : {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}})
    EXPECT_TRUE(keys.count(Subspace::from_span(Matrix::from_rows(2, 2, {v})).key()));
  // Pivot-set order: the pivot-0 lines come first.
  EXPECT_EQ(subs[0].pivots(), std::vector<int>{0});
  EXPECT_EQ(subs[2].pivots(), std::vector<int>{1});
}

/// Dedup of all spanning k-tuples: an independent count of k-subspaces.
std::size_t brute_force_subspaces(int n, int k, int p) {
  std::set<std::string> keys;
  std::vector<Vec> all;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (int x = 0; x < total; ++x) {
    Vec v(n);
    for (int i = 0, y = x; i < n; ++i, y /= p) v[i] = static_cast<Elem>(y % p);
    all.push_back(v);
  }
  std::vector<int> idx(k, 0);
  std::function<void(int, std::vector<Vec>&)> rec = [&](int pos, std::vector<Vec>& rows) {
    if (static_cast<int>(rows.size()) == k) {
      Subspace s = Subspace::from_span(Matrix::from_rows(p, n, rows));
      if (s.dim() == k) keys.insert(s.key());
      return;
    }
    for (int i = pos; i < total; ++i) {
      rows.push_back(all[i]);
      rec(i + 1, rows);
      rows.pop_back();
    }
  };
  std::vector<Vec> rows;
  rec(1, rows);
  return keys.size();
}

TEST(EnumerateSubspaces, MatchesBruteForceDedup) {
  EXPECT_EQ(enumerate_subspaces(3, 2, 2).size(), brute_force_subspaces(3, 2, 2));
  EXPECT_EQ(enumerate_subspaces(4, 2, 3).size(), brute_force_subspaces(4, 2, 3));
  EXPECT_EQ(enumerate_subspaces(4, 2, 3).size(), 130u);
}

TEST(EnumerateSubspaces, LengthEqualsGaussianBinomialAndKeysDistinct) {
  for (int p : {2, 3})
    for (int n = 0; n <= 5; ++n)
      for (int k = 0; k <= n; ++k) {
        std::set<std::string> keys;
        std::size_t len = 0;
        for_each_subspace(n, k, p, [&](const Subspace& s) {
          ++len;
          keys.insert(s.key());
          EXPECT_EQ(s.dim(), k);
        });
        EXPECT_EQ(BigInt(len), gaussian_binomial(n, k, p)) << "n=" << n << " k=" << k << " p=" << p;
        EXPECT_EQ(keys.size(), len);
      }
}

TEST(SubspaceKey, SpanningSetsAgree) {
  std::mt19937_64 rng(5);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 50; ++trial) {
      Matrix base(p, 3, 9);
      for (int r = 0; r < 3; ++r) {
        Vec v = random_vec(p, 9, rng);
        std::copy(v.begin(), v.end(), base.row(r).begin());
      }
      Matrix mix = testing::random_invertible(p, 3, rng);
      Matrix other = vstack(mix * base, Matrix(p, 1, 9));
      EXPECT_EQ(Subspace::from_span(base).key(), Subspace::from_span(other).key());
    }
  }
}

TEST(SubspaceIndexer, RankInvertsUnrankWithPivotLimit) {
  for (int p : {2, 3}) {
    SubspaceIndexer ix(6, 2, p, 3);
    EXPECT_EQ(BigInt(ix.count()), gaussian_binomial(3, 2, p) * ipow(p, 2 * 3));
    for (std::uint64_t i = 0; i < ix.count(); ++i) {
      Matrix m = ix.unrank(i);
      EXPECT_EQ(ix.rank(m), i);
      EXPECT_EQ(Subspace::from_span(m).basis(), m);
      if (p == 2) {
        std::uint64_t bits[2];
        ix.unrank_bits(i, bits);
        EXPECT_EQ(ix.rank_bits(bits), i);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 6; ++c) EXPECT_EQ(int(bits[r] >> c & 1), int(m(r, c)));
      }
    }
  }
}

TEST(SubspaceIndexer, IndicesFollowPivotSetOrder) {
  SubspaceIndexer ix(4, 2, 3);
  std::vector<int> prev{-1, -1};
  for (std::uint64_t i = 0; i < ix.count(); ++i) {
    auto piv = Subspace::from_span(ix.unrank(i)).pivots();
    EXPECT_GE(piv, prev);
    prev = piv;
  }
}

}  // namespace
}  // namespace nilgen
