#include "nilgen/lie_table.hpp"

#include <algorithm>

#include "nilgen/errors.hpp"

namespace nilgen {

LieTable::LieTable(int p, int dim)
    : p_(p), n_(dim), pairs_(static_cast<std::size_t>(dim) * dim) {
  Field::get(p);
}

void LieTable::set(int i, int j, std::vector<Term> terms) {
  if (i == j) throw DomainError("diagonal brackets are zero by definition");
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw DomainError("bracket index out of range");
  const Field& f = Field::get(p_);
  if (i > j) {
    std::swap(i, j);
    for (auto& t : terms) t.coeff = f.neg(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  std::vector<Term> merged;
  for (const auto& t : terms) {
    if (t.index < 0 || t.index >= n_) throw DomainError("bracket term index out of range");
    if (!merged.empty() && merged.back().index == t.index)
      merged.back().coeff = f.add(merged.back().coeff, t.coeff);
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  pairs_[i * n_ + j] = std::move(merged);
}

void LieTable::set(int i, int j, std::span<const Elem> value) {
  std::vector<Term> t;
  for (int k = 0; k < static_cast<int>(value.size()); ++k)
    if (value[k]) t.push_back({k, value[k]});
  set(i, j, std::move(t));
}

void LieTable::add_product(int i, int j, Elem coeff, Vec& acc) const {
  if (i == j || coeff == 0) return;
  const Field& f = Field::get(p_);
  if (i > j) {
    std::swap(i, j);
    coeff = f.neg(coeff);
  }
  for (const Term& t : pairs_[i * n_ + j]) acc[t.index] = f.add(acc[t.index], f.mul(coeff, t.coeff));
}

Vec LieTable::product(int i, int j) const {
  Vec out(n_, 0);
  add_product(i, j, 1, out);
  return out;
}

Vec LieTable::bracket(std::span<const Elem> x, std::span<const Elem> y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw DomainError("bracket operand length mismatch");
  const Field& f = Field::get(p_);
  Vec out(n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0 || i == j) continue;
      add_product(i, j, f.mul(x[i], y[j]), out);
    }
  }
  return out;
}

Matrix LieTable::right_ad(int j) const {
  Matrix m(p_, n_, n_);
  for (int i = 0; i < n_; ++i) {
    Vec v = product(i, j);
    std::copy(v.begin(), v.end(), m.row(i).begin());
  }
  return m;
}

std::optional<std::array<int, 3>> LieTable::jacobi_violation() const {
  // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]
  auto left_mul = [&](int a, const Vec& v, Vec& acc) {
    for (int k = 0; k < n_; ++k)
      if (v[k]) add_product(a, k, v[k], acc);
  };
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Vec ij = product(i, j);
      for (int k = j + 1; k < n_; ++k) {
        Vec acc(n_, 0);
        left_mul(i, product(j, k), acc);
        left_mul(j, product(k, i), acc);
        left_mul(k, ij, acc);
        if (!is_zero(acc)) return std::array<int, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

std::vector<Subspace> LieTable::lower_central_series() const {
  std::vector<Subspace> series{Subspace::full(p_, n_)};
  while (series.back().dim() > 0) {
    const Subspace& cur = series.back();
    std::vector<Vec> rows;
    for (int r = 0; r < cur.dim(); ++r) {
      Vec x = cur.basis().row_vec(r);
      for (int j = 0; j < n_; ++j) {
        Vec acc(n_, 0);
        for (int i = 0; i < n_; ++i)
          if (x[i]) add_product(i, j, x[i], acc);
        if (!is_zero(acc)) rows.push_back(std::move(acc));
      }
    }
    Subspace next = Subspace::from_span(Matrix::from_rows(p_, n_, rows));
    if (next.dim() == cur.dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subspace LieTable::center() const {
  // z is central iff z * right_ad(j) = 0 for all j.
  Matrix stacked(p_, n_ * n_, n_);
  for (int j = 0; j < n_; ++j) {
    Matrix ad = right_ad(j).transpose();
    for (int r = 0; r < n_; ++r)
      std::copy(ad.row(r).begin(), ad.row(r).end(), stacked.row(j * n_ + r).begin());
  }
  return nullspace(stacked);
}

LieTable LieTable::change_basis(const Matrix& basis) const {
  auto inv = inverse(basis);
  if (!inv || basis.rows() != n_) throw DomainError("change of basis is not invertible");
  LieTable out(p_, n_);
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      Vec v = bracket(basis.row(a), basis.row(b));
      if (is_zero(v)) continue;
      out.set(a, b, vec_mul(v, *inv));
    }
  return out;
}

LieTable LieTable::with_modulus(int q) const {
  LieTable out(q, n_);
  const Field& f = Field::get(q);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      std::vector<Term> t;
      for (const Term& s : terms(i, j)) t.push_back({s.index, f.reduce(s.coeff)});
      out.set(i, j, std::move(t));
    }
  return out;
}

}  // namespace nilgen
