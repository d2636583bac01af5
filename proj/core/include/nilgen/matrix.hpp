#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilgen/field.hpp"

namespace nilgen {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over GF(p).
///
/// Linear maps act on row vectors from the right: the image of the i-th
/// basis vector is row i, and "first A then B" is the product A * B.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int p, int rows, int cols);
  Matrix(int p, std::initializer_list<std::initializer_list<int>> rows);

  static Matrix identity(int p, int n);
  static Matrix from_rows(int p, int cols, const std::vector<Vec>& rows);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(int r, int c) const { return data_[r * cols_ + c]; }
  Elem& operator()(int r, int c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<Elem> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  Vec row_vec(int r) const { return Vec(row(r).begin(), row(r).end()); }

  const std::vector<Elem>& data() const { return data_; }

  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const = default;

  Matrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;
  /// Rows [r0, r0+n) and columns [c0, c0+m).
  Matrix block(int r0, int c0, int n, int m) const;
  /// Byte key (p, rows, cols, entries) for hashing and deduplication.
  std::string key() const;

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix reduced;  ///< nonzero rows only
  int rank = 0;
  std::vector<int> pivots;
};

/// Reduced row echelon form. For p = 2 the elimination runs on bit-packed rows.
RrefResult rref(const Matrix& m);
int rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Row vector times matrix.
Vec vec_mul(std::span<const Elem> v, const Matrix& m);
bool is_zero(std::span<const Elem> v);

}  // namespace nilgen
