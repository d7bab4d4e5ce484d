#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordan/exact/hpoly.hpp"

namespace jordan {

/// Dense row-major matrix over HPoly.
///
/// Representation matrices act on column vectors: entry (r, c) is the
/// coefficient of basis vector r in the image of basis vector c.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix diagonal(const std::vector<HPoly>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  HPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const HPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<HPoly>& entries() const { return entries_; }

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  PolyMatrix& operator*=(const HPoly& s);
  PolyMatrix operator-() const;

  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(PolyMatrix a, const HPoly& s) { return a *= s; }
  friend PolyMatrix operator*(const HPoly& s, PolyMatrix a) { return a *= s; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  bool is_zero() const;
  PolyMatrix transpose() const;
  /// Reverses the order of rows and columns (ascending <-> descending basis).
  PolyMatrix reversed() const;
  /// Entrywise h -> 0.
  PolyMatrix eval_at_zero() const;
  /// Largest h-degree over all entries; HPoly::kZeroDegree for the zero matrix.
  int max_degree() const;
  bool is_upper_unipotent() const;

  std::string to_string() const;

 private:
  void require_same_shape(const PolyMatrix& o, const char* op) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<HPoly> entries_;
};

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);

/// Inverse of an upper-triangular matrix with unit diagonal, by back-substitution.
PolyMatrix unipotent_inverse(const PolyMatrix& m);

/// Reflection through the anti-diagonal. With 1-based indices
/// result[i][j] = m[N+1-j][N+1-i]; internally result(i, j) = m(N-1-j, N-1-i).
PolyMatrix skew_transpose(const PolyMatrix& m);

struct EntryMismatch {
  std::size_t row;
  std::size_t col;
  HPoly actual;
  HPoly expected;
  std::string describe() const;
};

/// First entry (row-major) where the two matrices differ; throws on shape mismatch.
std::optional<EntryMismatch> first_mismatch(const PolyMatrix& actual, const PolyMatrix& expected);

}  // namespace jordan
