#include "nilgen/matrix.hpp"

#include <algorithm>
#include <cstdint>

#include "nilgen/errors.hpp"

namespace nilgen {

Matrix::Matrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  Field::get(p);
}

Matrix::Matrix(int p, std::initializer_list<std::initializer_list<int>> rows)
    : p_(p), rows_(static_cast<int>(rows.size())) {
  const Field& f = Field::get(p);
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw DomainError("ragged matrix literal");
    for (int v : r) data_.push_back(f.reduce(v));
  }
}

Matrix Matrix::identity(int p, int n) {
  Matrix m(p, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(int p, int cols, const std::vector<Vec>& rows) {
  Matrix m(p, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw DomainError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_ || p_ != other.p_) throw DomainError("matrix product shape/modulus mismatch");
  Matrix out(p_, rows_, other.cols_);
  const int n = other.cols_;
  std::vector<int> acc(n);
  for (int r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < cols_; ++k) {
      int a = (*this)(r, k);
      if (a == 0) continue;
      const Elem* src = other.data_.data() + static_cast<std::size_t>(k) * n;
      for (int c = 0; c < n; ++c) acc[c] += a * src[c];
    }
    Elem* dst = out.data_.data() + static_cast<std::size_t>(r) * n;
    for (int c = 0; c < n; ++c) dst[c] = static_cast<Elem>(acc[c] % p_);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(p_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::block(int r0, int c0, int n, int m) const {
  Matrix b(p_, n, m);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < m; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

std::string Matrix::key() const {
  std::string k;
  k.reserve(data_.size() + 3);
  k.push_back(static_cast<char>(p_));
  k.push_back(static_cast<char>(rows_));
  k.push_back(static_cast<char>(cols_));
  for (Elem e : data_) k.push_back(static_cast<char>(e));
  return k;
}

namespace {

RrefResult rref_f2(const Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
  const int words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(rows) * words, 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (m(r, c)) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

  RrefResult res;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    const int w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (bits[r * words + w] & mask) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      std::swap_ranges(bits.begin() + piv * words, bits.begin() + (piv + 1) * words,
                       bits.begin() + rank * words);
    for (int r = 0; r < rows; ++r)
      if (r != rank && (bits[r * words + w] & mask))
        for (int k = 0; k < words; ++k) bits[r * words + k] ^= bits[rank * words + k];
    res.pivots.push_back(c);
    ++rank;
  }
  res.rank = rank;
  res.reduced = Matrix(2, rank, cols);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < cols; ++c)
      res.reduced(r, c) = static_cast<Elem>((bits[r * words + c / 64] >> (c % 64)) & 1);
  return res;
}

RrefResult rref_fp(const Matrix& m) {
  const Field& f = Field::get(m.p());
  Matrix a = m;
  const int rows = a.rows(), cols = a.cols();
  RrefResult res;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int k = 0; k < cols; ++k) std::swap(a(piv, k), a(rank, k));
    Elem s = f.inv(a(rank, c));
    if (s != 1)
      for (int k = c; k < cols; ++k) a(rank, k) = f.mul(a(rank, k), s);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a(r, c) == 0) continue;
      Elem t = f.neg(a(r, c));
      for (int k = c; k < cols; ++k) a(r, k) = f.add(a(r, k), f.mul(t, a(rank, k)));
    }
    res.pivots.push_back(c);
    ++rank;
  }
  res.rank = rank;
  res.reduced = a.block(0, 0, rank, cols);
  return res;
}

}  // namespace

RrefResult rref(const Matrix& m) { return m.p() == 2 ? rref_f2(m) : rref_fp(m); }

int rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const int n = m.rows();
  Matrix aug(m.p(), n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  return red.reduced.block(0, n, n, n);
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols() || top.p() != bottom.p()) throw DomainError("vstack shape mismatch");
  Matrix out(top.p(), top.rows() + bottom.rows(), top.cols());
  for (int r = 0; r < top.rows(); ++r) std::copy(top.row(r).begin(), top.row(r).end(), out.row(r).begin());
  for (int r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), out.row(top.rows() + r).begin());
  return out;
}

Vec vec_mul(std::span<const Elem> v, const Matrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw DomainError("vector/matrix length mismatch");
  const int p = m.p(), n = m.cols();
  std::vector<int> acc(n, 0);
  for (int k = 0; k < m.rows(); ++k) {
    int a = v[k];
    if (a == 0) continue;
    auto src = m.row(k);
    for (int c = 0; c < n; ++c) acc[c] += a * src[c];
  }
  Vec out(n);
  for (int c = 0; c < n; ++c) out[c] = static_cast<Elem>(acc[c] % p);
  return out;
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

}  // namespace nilgen
