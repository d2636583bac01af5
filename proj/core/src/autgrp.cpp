#include "nilgen/autgrp.hpp"

#include <map>
#include <mutex>

#include "nilgen/errors.hpp"
#include "nilgen/stab_chain.hpp"

namespace nilgen {

AutGroup AutGroup::make(const LieTable& table, std::vector<Matrix> gens, std::optional<BigInt> order) {
  const int n = table.dim();
  for (const Matrix& g : gens) {
    if (g.rows() != n || g.cols() != n || g.p() != table.p()) throw DomainError("automorphism has the wrong shape");
    if (!inverse(g)) throw ConsistencyError("automorphism generator is singular");
    if (!is_homomorphism(table, table, g)) throw ConsistencyError("automorphism generator does not preserve brackets");
  }
  if (order && *order < 1) throw ConsistencyError("group order must be positive");
  return AutGroup{n, table.p(), std::move(gens), std::move(order)};
}

BigInt gl_order(int p, int d) {
  BigInt o = 1, q = ipow(p, d);
  for (int i = 0; i < d; ++i) o *= q - ipow(p, i);
  return o;
}

namespace {

Matrix power(Matrix a, BigInt e) {
  Matrix r = Matrix::identity(a.p(), a.rows());
  while (e > 0) {
    if ((e & 1) != 0) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

std::vector<BigInt> prime_factors(BigInt v) {
  std::vector<BigInt> out;
  for (BigInt q = 2; q * q <= v; ++q) {
    if (v % q != 0) continue;
    out.push_back(q);
    while (v % q == 0) v /= q;
  }
  if (v > 1) out.push_back(v);
  return out;
}

/// Companion matrix of x^d + c_{d-1} x^{d-1} + ... + c_0 in row convention.
Matrix companion(int p, const std::vector<int>& coeffs) {
  const int d = static_cast<int>(coeffs.size());
  const Field& f = Field::get(p);
  Matrix m(p, d, d);
  for (int i = 0; i + 1 < d; ++i) m(i, i + 1) = 1;
  for (int j = 0; j < d; ++j) m(d - 1, j) = f.neg(static_cast<Elem>(coeffs[j]));
  return m;
}

Matrix singer_cycle(int p, int d) {
  const BigInt target = ipow(p, d) - 1;
  const auto factors = prime_factors(target);
  std::vector<int> coeffs(d, 0);
  for (;;) {
    // Odometer over coefficient vectors, c_0 most significant.
    int pos = d - 1;
    while (pos >= 0 && coeffs[pos] == p - 1) coeffs[pos--] = 0;
    if (pos < 0) throw ConsistencyError("no primitive polynomial found");
    ++coeffs[pos];
    if (coeffs[0] == 0) continue;
    Matrix c = companion(p, coeffs);
    if (!power(c, target).is_identity()) continue;
    bool primitive = true;
    for (const BigInt& q : factors)
      if (power(c, target / q).is_identity()) {
        primitive = false;
        break;
      }
    if (primitive) return c;
  }
}

}  // namespace

AutGroup gl_generators(int p, int d) {
  if (d < 1) throw DomainError("GL needs dimension >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, int>, AutGroup> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, d}); it != cache.end()) return it->second;

  std::vector<Matrix> gens;
  const BigInt order = gl_order(p, d);
  if (d == 1) {
    gens.push_back(Matrix(p, {{Field::get(p).primitive_root()}}));
  } else {
    gens.push_back(singer_cycle(p, d));
    Matrix t = Matrix::identity(p, d);
    t(0, 1) = 1;
    gens.push_back(t);
    for (int i = 0; i < d && group_order(p, d, gens) != order; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        Matrix e = Matrix::identity(p, d);
        e(i, j) = 1;
        gens.push_back(e);
      }
    if (group_order(p, d, gens) != order) throw ConsistencyError("GL generators do not generate");
  }
  AutGroup g = AutGroup::make(make_abelian(p, d).table(), std::move(gens), order);
  cache.emplace(std::make_pair(p, d), g);
  return g;
}

Matrix lift_map(const CoverData& src, const LieTable& target, const std::vector<Vec>& gen_images) {
  const NilAlgebra& L = src.base;
  const int n = src.n(), m = src.m();
  const Field& f = Field::get(target.p());
  Matrix out(target.p(), n + m, target.dim());
  Matrix on_l = extend_by_definitions(L, target, gen_images);
  for (int i = 0; i < n; ++i) std::copy(on_l.row(i).begin(), on_l.row(i).end(), out.row(i).begin());
  for (int t = 0; t < m; ++t) {
    auto [i, j] = src.tail_origin[t];
    Vec v = target.bracket(out.row(i), out.row(j));
    for (const Term& term : L.table().terms(i, j)) {
      auto xk = out.row(term.index);
      for (int c = 0; c < target.dim(); ++c) v[c] = f.sub(v[c], f.mul(term.coeff, xk[c]));
    }
    std::copy(v.begin(), v.end(), out.row(n + t).begin());
  }
  return out;
}

Matrix lift_automorphism(const CoverData& cd, const Matrix& alpha) {
  const NilAlgebra& L = cd.base;
  if (alpha.rows() != L.dim() || alpha.cols() != L.dim() || !inverse(alpha) ||
      !is_homomorphism(L.table(), L.table(), alpha))
    throw DomainError("map is not an automorphism of the base algebra");
  std::vector<Vec> imgs;
  for (int i = 0; i < L.num_generators(); ++i) {
    Vec v(cd.table.dim(), 0);
    std::copy(alpha.row(i).begin(), alpha.row(i).end(), v.begin());
    imgs.push_back(std::move(v));
  }
  return lift_map(cd, cd.table, imgs);
}

Matrix restrict_to_mult(const CoverData& cd, const Matrix& lifted) {
  const int n = cd.n(), m = cd.m();
  for (int t = 0; t < m; ++t)
    for (int c = 0; c < n; ++c)
      if (lifted(n + t, c)) throw ConsistencyError("lifted map does not preserve the multiplicator");
  Matrix r = lifted.block(n, n, m, m);
  if (!inverse(r)) throw ConsistencyError("restriction to the multiplicator is singular");
  return r;
}

std::vector<Matrix> mult_representation(const CoverData& cd, const std::vector<Matrix>& gens) {
  std::vector<Matrix> out;
  out.reserve(gens.size());
  for (const Matrix& g : gens) out.push_back(restrict_to_mult(cd, lift_automorphism(cd, g)));
  return out;
}

std::vector<Matrix> central_automorphisms(const NilAlgebra& K) {
  const int c = K.nilpotency_class();
  if (c < 2) throw DomainError("central automorphisms need a non-abelian algebra");
  const int n = K.dim(), d = K.num_generators();
  auto [lo, hi] = K.layer(c);
  std::vector<Matrix> out;
  for (int i = 0; i < d; ++i)
    for (int j = lo; j < hi; ++j) {
      std::vector<Vec> imgs;
      for (int g = 0; g < d; ++g) {
        Vec v(n, 0);
        v[g] = 1;
        if (g == i) v[j] = 1;
        imgs.push_back(std::move(v));
      }
      out.push_back(extend_by_definitions(K, K.table(), imgs));
    }
  return out;
}

Matrix push_to_descendant(const NilAlgebra& K, const Matrix& alpha) {
  std::vector<Vec> imgs;
  for (int i = 0; i < K.num_generators(); ++i) {
    Vec v(K.dim(), 0);
    std::copy(alpha.row(i).begin(), alpha.row(i).end(), v.begin());
    imgs.push_back(std::move(v));
  }
  return extend_by_definitions(K, K.table(), imgs);
}

AutGroup assemble_descendant_aut(const AutGroup& parent, const NilAlgebra& K, const std::vector<Matrix>& stab_gens,
                                 const BigInt& orbit_size) {
  std::vector<Matrix> gens;
  for (const Matrix& g : stab_gens) gens.push_back(push_to_descendant(K, g));
  for (Matrix& z : central_automorphisms(K)) gens.push_back(std::move(z));
  std::optional<BigInt> order;
  if (parent.order) {
    if (orbit_size < 1 || *parent.order % orbit_size != 0)
      throw ConsistencyError("orbit size does not divide the parent group order");
    auto [lo, hi] = K.layer(K.nilpotency_class());
    order = *parent.order / orbit_size * ipow(K.p(), K.num_generators() * (hi - lo));
  }
  return AutGroup::make(K.table(), std::move(gens), std::move(order));
}

}  // namespace nilgen
