#include "nilgen/cover.hpp"

#include <set>

#include "nilgen/errors.hpp"

namespace nilgen {

namespace {

/// Products of the extended basis, built row by row. Tail coordinates are
/// central, so only the first n columns of an operand matter.
struct Builder {
  int n, total;
  const Field& f;
  std::vector<Vec> prod;  // n x n, entry i*n+j for i < j

  Builder(int n_, int total_, const Field& f_)
      : n(n_), total(total_), f(f_), prod(static_cast<std::size_t>(n_) * n_, Vec(total_, 0)) {}

  void add_basis_bracket(int a, int k, Elem coeff, Vec& acc) const {
    if (a == k || coeff == 0) return;
    const Vec* src;
    if (a < k) {
      src = &prod[a * n + k];
    } else {
      src = &prod[k * n + a];
      coeff = f.neg(coeff);
    }
    for (int t = 0; t < total; ++t)
      if ((*src)[t]) acc[t] = f.add(acc[t], f.mul(coeff, (*src)[t]));
  }

  /// [b_a, v]
  Vec left(int a, const Vec& v) const {
    Vec acc(total, 0);
    for (int k = 0; k < n; ++k)
      if (v[k]) add_basis_bracket(a, k, v[k], acc);
    return acc;
  }

  Vec basis_bracket(int a, int b) const {
    Vec acc(total, 0);
    add_basis_bracket(a, b, 1, acc);
    return acc;
  }

  Vec jacobi(int i, int j, int k) const {
    Vec acc = left(i, basis_bracket(j, k));
    Vec b = left(j, basis_bracket(k, i));
    Vec c = left(k, basis_bracket(i, j));
    for (int t = 0; t < total; ++t) acc[t] = f.add(acc[t], f.add(b[t], c[t]));
    return acc;
  }
};

}  // namespace

Subspace CoverData::mult() const {
  Matrix b(table.p(), m(), table.dim());
  for (int t = 0; t < m(); ++t) b(t, n() + t) = 1;
  return Subspace::from_span(b);
}

Subspace CoverData::nucleus_in_table() const {
  Matrix b(table.p(), nucleus.dim(), table.dim());
  for (int r = 0; r < nucleus.dim(); ++r)
    for (int t = 0; t < m(); ++t) b(r, n() + t) = nucleus.basis()(r, t);
  return Subspace::from_span(b);
}

CoverData compute_cover(const NilAlgebra& L, CoverOptions opts) {
  const int n = L.dim(), p = L.p(), d = L.num_generators(), c = L.nilpotency_class();
  const auto& w = L.weights();
  const Field& f = Field::get(p);

  std::set<std::pair<int, int>> defining;
  for (int k = 0; k < n; ++k)
    if (const auto& def = L.definitions()[k])
      defining.insert({std::min(def->left, def->right), std::max(def->left, def->right)});

  std::vector<TailOrigin> origins;
  std::vector<int> tail_of(static_cast<std::size_t>(n) * n, -1);
  const int tail_rows = opts.basic ? n : d;
  for (int i = 0; i < tail_rows; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (w[i] + w[j] > c + 1 || defining.count({i, j})) continue;
      tail_of[i * n + j] = static_cast<int>(origins.size());
      origins.push_back({i, j});
    }
  const int T = static_cast<int>(origins.size());
  const int total = n + T;

  Builder b(n, total, f);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vec& v = b.prod[i * n + j];
      if (opts.basic || i < d) {
        for (const Term& t : L.table().terms(i, j)) v[t.index] = t.coeff;
        if (tail_of[i * n + j] >= 0) v[n + tail_of[i * n + j]] = 1;
      } else {
        // [[u,v],x] = [u,[v,x]] - [v,[u,x]]
        const Definition& def = *L.definitions()[i];
        Vec a = b.left(def.left, b.basis_bracket(def.right, j));
        Vec z = b.left(def.right, b.basis_bracket(def.left, j));
        for (int t = 0; t < total; ++t) v[t] = f.sub(a[t], z[t]);
      }
    }
  }

  auto collect = [&](bool all) {
    std::vector<Vec> rows;
    const int lead = all ? n : d;
    for (int i = 0; i < lead; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          Vec jv = b.jacobi(i, j, k);
          for (int t = 0; t < n; ++t)
            if (jv[t]) throw ConsistencyError("a Jacobi value escapes the tail span");
          Vec tail(jv.begin() + n, jv.end());
          if (!is_zero(tail)) rows.push_back(std::move(tail));
        }
    return Subspace::from_span(Matrix::from_rows(p, T, rows));
  };
  Subspace rel = collect(opts.basic);
  if (opts.check_full_jacobi && !opts.basic && !(collect(true) == rel))
    throw ConsistencyError("reduced Jacobi set spans a different relation space");

  // Eliminate pivot tails; the others survive.
  std::vector<bool> pivot(T, false);
  for (int pc : rel.pivots()) pivot[pc] = true;
  std::vector<int> survivor_index(T, -1);
  std::vector<TailOrigin> survivors;
  for (int t = 0; t < T; ++t)
    if (!pivot[t]) {
      survivor_index[t] = static_cast<int>(survivors.size());
      survivors.push_back(origins[t]);
    }
  const int m = static_cast<int>(survivors.size());

  CoverData cd;
  cd.base = L;
  cd.table = LieTable(p, n + m);
  cd.tail_origin = survivors;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec& v = b.prod[i * n + j];
      Vec tail = rel.reduce(std::span<const Elem>(v).subspan(n));
      Vec out(n + m, 0);
      std::copy(v.begin(), v.begin() + n, out.begin());
      for (int t = 0; t < T; ++t)
        if (survivor_index[t] >= 0) out[n + survivor_index[t]] = tail[t];
      if (!is_zero(out)) cd.table.set(i, j, out);
    }

  auto lcs = cd.table.lower_central_series();
  Subspace gamma = static_cast<int>(lcs.size()) > c ? lcs[c] : Subspace(p, n + m);
  Matrix nb(p, gamma.dim(), m);
  for (int r = 0; r < gamma.dim(); ++r) {
    for (int t = 0; t < n; ++t)
      if (gamma.basis()(r, t)) throw ConsistencyError("nucleus is not contained in the multiplicator");
    for (int t = 0; t < m; ++t) nb(r, t) = gamma.basis()(r, n + t);
  }
  cd.nucleus = Subspace::from_span(nb);
  return cd;
}

Normalized star(const CoverData& cd) { return normalize(cd.table); }

bool is_allowable(const CoverData& cd, const Subspace& J) {
  if (J.ambient() != cd.m() || J.p() != cd.table.p()) return false;
  return J.dim() < cd.m() && J.sum(cd.nucleus).dim() == cd.m();
}

Quotient quotient_by(const CoverData& cd, const Subspace& J) {
  if (!is_allowable(cd, J)) throw DomainError("subspace is not allowable");
  const NilAlgebra& L = cd.base;
  const int n = cd.n(), m = cd.m(), p = L.p(), c = L.nilpotency_class();
  const int s = m - J.dim();
  const auto [top_lo, top_hi] = L.layer(c);

  std::vector<Vec> chosen;
  std::vector<Definition> defs;
  Subspace span = J;
  for (int i = 0; i < L.num_generators() && static_cast<int>(chosen.size()) < s; ++i)
    for (int j = std::max(top_lo, i + 1); j < top_hi && static_cast<int>(chosen.size()) < s; ++j) {
      Vec full = cd.table.product(i, j);
      Vec v(full.begin() + n, full.end());
      if (span.contains(v)) continue;
      span = span.sum(Subspace::from_span(Matrix::from_rows(p, m, {v})));
      chosen.push_back(std::move(v));
      defs.push_back({i, j});
    }
  if (static_cast<int>(chosen.size()) != s) throw ConsistencyError("top products do not span M/J");

  Matrix B = vstack(Matrix::from_rows(p, m, chosen), J.basis());
  auto Binv = inverse(B);
  if (!Binv) throw ConsistencyError("new layer and J are not complementary");

  Quotient q;
  q.projection = Matrix(p, n + m, n + s);
  for (int i = 0; i < n; ++i) q.projection(i, i) = 1;
  for (int t = 0; t < m; ++t)
    for (int k = 0; k < s; ++k) q.projection(n + t, n + k) = (*Binv)(t, k);

  LieTable kt(p, n + s);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v = vec_mul(cd.table.product(i, j), q.projection);
      if (!is_zero(v)) kt.set(i, j, v);
    }
  std::vector<int> weights = L.weights();
  std::vector<std::optional<Definition>> kdefs = L.definitions();
  for (int k = 0; k < s; ++k) {
    weights.push_back(c + 1);
    kdefs.push_back(defs[k]);
  }
  q.algebra = NilAlgebra(std::move(kt), std::move(weights), std::move(kdefs));

  q.preimage = Matrix(p, n + s, n + m);
  for (int i = 0; i < n; ++i) q.preimage(i, i) = 1;
  for (int k = 0; k < s; ++k)
    for (int t = 0; t < m; ++t) q.preimage(n + k, n + t) = chosen[k][t];
  return q;
}

DescendantMap descendant_map(const CoverData& cd, const NilAlgebra& K) {
  const int n = cd.n(), m = cd.m(), p = K.p(), dk = K.dim();
  if (!(top_quotient(K) == cd.base)) throw DomainError("algebra is not presented as a descendant of the cover's base");
  const Field& f = Field::get(p);
  DescendantMap dm;
  dm.projection = Matrix(p, n + m, dk);
  for (int i = 0; i < n; ++i) dm.projection(i, i) = 1;
  for (int t = 0; t < m; ++t) {
    auto [i, j] = cd.tail_origin[t];
    Vec v = K.table().product(i, j);
    for (const Term& term : cd.base.table().terms(i, j)) v[term.index] = f.sub(v[term.index], term.coeff);
    std::copy(v.begin(), v.end(), dm.projection.row(n + t).begin());
  }
  if (!is_homomorphism(cd.table, K.table(), dm.projection))
    throw ConsistencyError("canonical map from the cover is not a homomorphism");
  Matrix on_m = dm.projection.block(n, 0, m, dk);
  dm.kernel = nullspace(on_m.transpose());
  if (m - dm.kernel.dim() != dk - n) throw ConsistencyError("canonical map from the cover is not onto");
  return dm;
}

}  // namespace nilgen
