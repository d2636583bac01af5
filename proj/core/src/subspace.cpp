#include "nilgen/subspace.hpp"

#include <algorithm>

#include "nilgen/errors.hpp"

namespace nilgen {

BigInt ipow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

Subspace::Subspace(int p, int ambient) : p_(p), ambient_(ambient), basis_(p, 0, ambient) {}

Subspace Subspace::from_span(const Matrix& span) {
  Subspace s(span.p(), span.cols());
  RrefResult r = rref(span);
  s.basis_ = std::move(r.reduced);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::full(int p, int ambient) { return from_span(Matrix::identity(p, ambient)); }

Vec Subspace::reduce(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DomainError("vector length does not match ambient");
  const Field& f = Field::get(p_);
  Vec out(v.begin(), v.end());
  for (int r = 0; r < dim(); ++r) {
    Elem c = out[pivots_[r]];
    if (c == 0) continue;
    Elem t = f.neg(c);
    auto row = basis_.row(r);
    for (int j = pivots_[r]; j < ambient_; ++j) out[j] = f.add(out[j], f.mul(t, row[j]));
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (int r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const { return from_span(vstack(basis_, other.basis_)); }

std::string Subspace::key() const {
  std::string k;
  k.push_back(static_cast<char>(p_));
  k.push_back(static_cast<char>(ambient_));
  k.push_back(static_cast<char>(dim()));
  for (int r = 0; r < dim(); ++r) {
    auto row = basis_.row(r);
    if (p_ == 2) {
      unsigned char byte = 0;
      int filled = 0;
      for (int c = 0; c < ambient_; ++c) {
        byte = static_cast<unsigned char>((byte << 1) | row[c]);
        if (++filled == 8) {
          k.push_back(static_cast<char>(byte));
          byte = 0;
          filled = 0;
        }
      }
      if (filled) k.push_back(static_cast<char>(byte << (8 - filled)));
    } else {
      for (Elem e : row) k.push_back(static_cast<char>(e));
    }
  }
  return k;
}

Subspace nullspace(const Matrix& m) {
  const int n = m.cols();
  const Field& f = Field::get(m.p());
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivots) is_pivot[c] = true;
  Matrix basis(m.p(), n - r.rank, n);
  int row = 0;
  for (int freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    basis(row, freec) = 1;
    for (int i = 0; i < r.rank; ++i) basis(row, r.pivots[i]) = f.neg(r.reduced(i, freec));
    ++row;
  }
  return Subspace::from_span(basis);
}

BigInt gaussian_binomial(int m, int k, int q) {
  if (k < 0 || k > m) throw DomainError("gaussian_binomial requires 0 <= k <= m");
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(q, m - i) - 1;
    den *= ipow(q, i + 1) - 1;
  }
  return num / den;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("subspace count exceeds 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("subspace count exceeds 64 bits");
  return r;
}

}  // namespace

SubspaceIndexer::SubspaceIndexer(int m, int k, int p, int pivot_limit)
    : m_(m), k_(k), p_(p), a_(pivot_limit < 0 ? m : pivot_limit) {
  if (k < 0 || k > m || a_ > m || k > 64 || m > 255) throw DomainError("invalid subspace indexer shape");
  Field::get(p);
  pow_.assign(static_cast<std::size_t>(m) * std::max(k, 1) + 1, 1);
  for (std::size_t e = 1; e < pow_.size(); ++e) {
    // Saturate rather than throw: large powers only matter if they are reached.
    pow_[e] = pow_[e - 1] > std::numeric_limits<std::uint64_t>::max() / p ? 0 : pow_[e - 1] * p;
  }
  auto pw = [&](int e) {
    if (pow_[e] == 0 && e > 0) throw DomainError("subspace count exceeds 64 bits");
    return pow_[e];
  };
  const int w = m + 1;
  weight_.assign(static_cast<std::size_t>(k + 1) * w, 0);
  prefix_.assign(static_cast<std::size_t>(k + 1) * w, 0);
  for (int c = 0; c <= m; ++c) weight_[k * w + c] = 1;
  for (int r = k - 1; r >= 0; --r) {
    for (int c = a_ - 1; c >= 0; --c) {
      std::uint64_t next = weight_[(r + 1) * w + c + 1];
      std::uint64_t term = next == 0 ? 0 : checked_mul(pw(free_in_row(r, c)), next);
      weight_[r * w + c] = checked_add(weight_[r * w + c + 1], term);
    }
    for (int c = 0; c < m; ++c) {
      std::uint64_t next = c < a_ ? weight_[(r + 1) * w + c + 1] : 0;
      std::uint64_t term = next == 0 ? 0 : checked_mul(pw(free_in_row(r, c)), next);
      prefix_[r * w + c + 1] = checked_add(prefix_[r * w + c], term);
    }
  }
  count_ = weight_[0];
  if (k == 0) count_ = 1;
}

void SubspaceIndexer::unrank(std::uint64_t idx, Elem* out) const {
  std::fill(out, out + static_cast<std::size_t>(k_) * m_, 0);
  const int w = m_ + 1;
  int piv[64];
  int prev = -1;
  int e_prefix = 0;
  for (int r = 0; r < k_; ++r) {
    int x = prev + 1;
    for (;; ++x) {
      std::uint64_t next = weight_[(r + 1) * w + x + 1];
      if (next == 0) continue;
      std::uint64_t block = pow_[e_prefix + free_in_row(r, x)] * next;
      if (idx < block) break;
      idx -= block;
    }
    piv[r] = x;
    e_prefix += free_in_row(r, x);
    prev = x;
  }
  // Free digits, last position least significant.
  for (int r = k_ - 1; r >= 0; --r) {
    Elem* row = out + static_cast<std::size_t>(r) * m_;
    row[piv[r]] = 1;
    int pi = k_ - 1;
    for (int c = m_ - 1; c > piv[r]; --c) {
      while (pi > r && piv[pi] > c) --pi;
      if (pi > r && piv[pi] == c) continue;
      row[c] = static_cast<Elem>(idx % p_);
      idx /= p_;
    }
  }
}

std::uint64_t SubspaceIndexer::rank_with_pivots(const Elem* rref, const int* piv) const {
  const int w = m_ + 1;
  std::uint64_t off = 0;
  int prev = -1;
  int e_prefix = 0;
  for (int r = 0; r < k_; ++r) {
    off += pow_[e_prefix] * (prefix_[r * w + piv[r]] - prefix_[r * w + prev + 1]);
    e_prefix += free_in_row(r, piv[r]);
    prev = piv[r];
  }
  std::uint64_t val = 0;
  for (int r = 0; r < k_; ++r) {
    const Elem* row = rref + static_cast<std::size_t>(r) * m_;
    int pi = r + 1;
    for (int c = piv[r] + 1; c < m_; ++c) {
      if (pi < k_ && piv[pi] == c) {
        ++pi;
        continue;
      }
      val = val * p_ + row[c];
    }
  }
  return off + val;
}

std::uint64_t SubspaceIndexer::rank(const Elem* rref) const {
  int piv[64];
  for (int r = 0; r < k_; ++r) {
    const Elem* row = rref + static_cast<std::size_t>(r) * m_;
    int c = 0;
    while (c < m_ && row[c] == 0) ++c;
    if (c >= a_) throw DomainError("subspace violates the pivot constraint");
    piv[r] = c;
  }
  return rank_with_pivots(rref, piv);
}

void SubspaceIndexer::unrank_bits(std::uint64_t idx, std::uint64_t* rows) const {
  const int w = m_ + 1;
  int piv[64];
  int prev = -1;
  int e_prefix = 0;
  std::uint64_t pivmask = 0;
  for (int r = 0; r < k_; ++r) {
    int x = prev + 1;
    for (;; ++x) {
      std::uint64_t next = weight_[(r + 1) * w + x + 1];
      if (next == 0) continue;
      std::uint64_t block = pow_[e_prefix + free_in_row(r, x)] * next;
      if (idx < block) break;
      idx -= block;
    }
    piv[r] = x;
    pivmask |= std::uint64_t{1} << x;
    e_prefix += free_in_row(r, x);
    prev = x;
  }
  for (int r = k_ - 1; r >= 0; --r) {
    std::uint64_t row = std::uint64_t{1} << piv[r];
    for (int c = m_ - 1; c > piv[r]; --c) {
      if (pivmask >> c & 1) continue;
      row |= (idx & 1) << c;
      idx >>= 1;
    }
    rows[r] = row;
  }
}

std::uint64_t SubspaceIndexer::rank_bits(const std::uint64_t* rows) const {
  const int w = m_ + 1;
  int piv[64];
  std::uint64_t pivmask = 0;
  for (int r = 0; r < k_; ++r) {
    piv[r] = __builtin_ctzll(rows[r]);
    pivmask |= std::uint64_t{1} << piv[r];
  }
  std::uint64_t off = 0;
  int prev = -1;
  int e_prefix = 0;
  for (int r = 0; r < k_; ++r) {
    off += pow_[e_prefix] * (prefix_[r * w + piv[r]] - prefix_[r * w + prev + 1]);
    e_prefix += free_in_row(r, piv[r]);
    prev = piv[r];
  }
  std::uint64_t val = 0;
  for (int r = 0; r < k_; ++r)
    for (int c = piv[r] + 1; c < m_; ++c) {
      if (pivmask >> c & 1) continue;
      val = val << 1 | (rows[r] >> c & 1);
    }
  return off + val;
}

Matrix SubspaceIndexer::unrank(std::uint64_t idx) const {
  if (idx >= count_) throw DomainError("subspace index out of range");
  Matrix out(p_, k_, m_);
  if (k_ > 0) unrank(idx, &out(0, 0));
  return out;
}

std::uint64_t SubspaceIndexer::rank(const Matrix& m) const {
  if (m.rows() != k_ || m.cols() != m_) throw DomainError("subspace shape mismatch");
  if (k_ == 0) return 0;
  return rank(m.data().data());
}

void for_each_subspace(int n, int k, int p, const std::function<void(const Subspace&)>& fn) {
  SubspaceIndexer ix(n, k, p);
  for (std::uint64_t i = 0; i < ix.count(); ++i) fn(Subspace::from_span(ix.unrank(i)));
}

std::vector<Subspace> enumerate_subspaces(int n, int k, int p) {
  std::vector<Subspace> out;
  for_each_subspace(n, k, p, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

}  // namespace nilgen
