#include "nilgen/allowable.hpp"

#include "nilgen/errors.hpp"

namespace nilgen {

BigInt count_allowable(const CoverData& cd, int s) {
  const int a = cd.nucleus_dim(), m = cd.m();
  if (s < 1 || s > a) return 0;
  return gaussian_binomial(a, s, cd.table.p()) * ipow(cd.table.p(), s * (m - a));
}

namespace {

Matrix dual_coordinates(const CoverData& cd) {
  const int m = cd.m(), p = cd.table.p();
  Subspace ann = nullspace(cd.nucleus.basis());
  std::vector<Vec> rows;
  Subspace span = ann;
  for (int i = 0; i < m && static_cast<int>(rows.size()) < m - ann.dim(); ++i) {
    Vec e(m, 0);
    e[i] = 1;
    if (span.contains(e)) continue;
    span = span.sum(Subspace::from_span(Matrix::from_rows(p, m, {e})));
    rows.push_back(std::move(e));
  }
  for (int r = 0; r < ann.dim(); ++r) rows.push_back(ann.basis().row_vec(r));
  return Matrix::from_rows(p, m, rows);
}

}  // namespace

AllowableSpace::AllowableSpace(const CoverData& cd, int s)
    : p_(cd.table.p()),
      m_(cd.m()),
      s_(s),
      P_(dual_coordinates(cd)),
      Pinv_(*inverse(P_)),
      indexer_(cd.m(), s, cd.table.p(), cd.nucleus_dim()) {
  if (s < 1 || s > cd.nucleus_dim()) throw DomainError("step must lie in [1, dim N]");
}

Subspace AllowableSpace::subspace(std::uint64_t idx) const {
  Matrix w = indexer_.unrank(idx) * P_;
  return nullspace(w);
}

std::uint64_t AllowableSpace::index_of(const Subspace& J) const {
  if (J.ambient() != m_ || J.dim() != m_ - s_) throw DomainError("subspace has the wrong shape");
  Subspace w = nullspace(J.basis());
  Subspace wc = Subspace::from_span(w.basis() * Pinv_);
  return indexer_.rank(wc.basis());
}

Matrix AllowableSpace::dual_action(const Matrix& rho) const {
  auto inv = inverse(rho);
  if (!inv) throw DomainError("action matrix is singular");
  return P_ * inv->transpose() * Pinv_;
}

PackedAction::PackedAction(const Matrix& dual) {
  if (dual.p() == 2) {
    if (dual.cols() > 64) throw DomainError("packed action supports at most 64 columns");
    bits.assign(dual.rows(), 0);
    for (int r = 0; r < dual.rows(); ++r)
      for (int c = 0; c < dual.cols(); ++c)
        if (dual(r, c)) bits[r] |= std::uint64_t{1} << c;
  } else {
    bytes = dual;
  }
}

namespace {

std::uint64_t act_f2(const AllowableSpace& space, std::uint64_t idx, const PackedAction& g) {
  const SubspaceIndexer& ix = space.indexer();
  const int s = ix.k();
  std::uint64_t w[64], out[64];
  ix.unrank_bits(idx, w);
  for (int r = 0; r < s; ++r) {
    std::uint64_t acc = 0, x = w[r];
    while (x) {
      acc ^= g.bits[__builtin_ctzll(x)];
      x &= x - 1;
    }
    out[r] = acc;
  }
  // RREF on masks; the pivot of a row is its lowest set bit.
  int rank = 0;
  for (int c = 0; c < ix.m() && rank < s; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    int piv = -1;
    for (int r = rank; r < s; ++r)
      if (out[r] & bit) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (c >= ix.pivot_limit()) throw ConsistencyError("action maps an allowable subspace outside the allowable set");
    std::swap(out[piv], out[rank]);
    for (int r = 0; r < s; ++r)
      if (r != rank && (out[r] & bit)) out[r] ^= out[rank];
    ++rank;
  }
  if (rank != s) throw ConsistencyError("action matrix is singular on the dual");
  return ix.rank_bits(out);
}

std::uint64_t act_fp(const AllowableSpace& space, std::uint64_t idx, const PackedAction& g) {
  const SubspaceIndexer& ix = space.indexer();
  const int s = ix.k(), m = ix.m(), p = ix.p();
  const Field& f = Field::get(p);
  thread_local std::vector<Elem> w, out;
  thread_local std::vector<int> acc;
  w.resize(static_cast<std::size_t>(s) * m);
  out.resize(static_cast<std::size_t>(s) * m);
  acc.resize(m);
  ix.unrank(idx, w.data());
  const Elem* a = g.bytes.data().data();
  for (int r = 0; r < s; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    const Elem* wr = w.data() + r * m;
    for (int k = 0; k < m; ++k) {
      int x = wr[k];
      if (!x) continue;
      const Elem* ak = a + k * m;
      for (int c = 0; c < m; ++c) acc[c] += x * ak[c];
    }
    Elem* orow = out.data() + r * m;
    for (int c = 0; c < m; ++c) orow[c] = static_cast<Elem>(acc[c] % p);
  }
  int piv[64];
  int rank = 0;
  for (int c = 0; c < m && rank < s; ++c) {
    int pr = -1;
    for (int r = rank; r < s; ++r)
      if (out[r * m + c]) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (c >= ix.pivot_limit()) throw ConsistencyError("action maps an allowable subspace outside the allowable set");
    Elem* R = out.data() + rank * m;
    if (pr != rank) std::swap_ranges(out.data() + pr * m, out.data() + pr * m + m, R);
    Elem inv = f.inv(R[c]);
    if (inv != 1)
      for (int k = c; k < m; ++k) R[k] = f.mul(R[k], inv);
    for (int r = 0; r < s; ++r) {
      Elem* X = out.data() + r * m;
      if (r == rank || !X[c]) continue;
      Elem t = f.neg(X[c]);
      for (int k = c; k < m; ++k) X[k] = f.add(X[k], f.mul(t, R[k]));
    }
    piv[rank++] = c;
  }
  if (rank != s) throw ConsistencyError("action matrix is singular on the dual");
  return ix.rank_with_pivots(out.data(), piv);
}

}  // namespace

std::uint64_t act_on_index(const AllowableSpace& space, std::uint64_t idx, const PackedAction& g) {
  return space.p() == 2 ? act_f2(space, idx, g) : act_fp(space, idx, g);
}

}  // namespace nilgen
