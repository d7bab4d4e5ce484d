#include "jordan/exact/poly_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jordan {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = HPoly(1L);
  return out;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<HPoly>& diag) {
  PolyMatrix out(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

void PolyMatrix::require_same_shape(const PolyMatrix& o, const char* op) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    std::ostringstream msg;
    msg << op << ": shape " << rows_ << "x" << cols_ << " vs " << o.rows_ << "x" << o.cols_;
    throw std::invalid_argument(msg.str());
  }
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  require_same_shape(o, "matrix add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  require_same_shape(o, "matrix subtract");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const HPoly& s) {
  for (auto& e : entries_) {
    if (!e.is_zero()) e *= s;
  }
  return *this;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) {
    std::ostringstream msg;
    msg << "matrix multiply: " << a.rows_ << "x" << a.cols_ << " times " << b.rows_ << "x" << b.cols_;
    throw std::invalid_argument(msg.str());
  }
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const HPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const HPoly& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const HPoly& e) { return e.is_zero(); });
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

PolyMatrix PolyMatrix::reversed() const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(rows_ - 1 - i, cols_ - 1 - j) = (*this)(i, j);
  }
  return out;
}

PolyMatrix PolyMatrix::eval_at_zero() const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = HPoly(entries_[i].eval_at_zero());
  return out;
}

int PolyMatrix::max_degree() const {
  int d = HPoly::kZeroDegree;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

bool PolyMatrix::is_upper_unipotent() const {
  if (!is_square()) return false;
  const HPoly one(1L);
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != one) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
    out << "]\n";
  }
  return out.str();
}

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const HPoly& x = a(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const HPoly& y = b(i2, j2);
          if (!y.is_zero()) out(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * y;
        }
      }
    }
  }
  return out;
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

PolyMatrix unipotent_inverse(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("unipotent_inverse: matrix is not square");
  if (!m.is_upper_unipotent()) {
    throw std::invalid_argument("unipotent_inverse: matrix is not upper triangular with unit diagonal");
  }
  const std::size_t n = m.rows();
  // Solve M N = I column by column; N is upper unipotent as well.
  PolyMatrix inv = PolyMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = c; r-- > 0;) {
      HPoly acc;
      for (std::size_t k = r + 1; k <= c; ++k) {
        if (!m(r, k).is_zero() && !inv(k, c).is_zero()) acc += m(r, k) * inv(k, c);
      }
      inv(r, c) = -acc;
    }
  }
  return inv;
}

PolyMatrix skew_transpose(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("skew_transpose: matrix is not square");
  const std::size_t n = m.rows();
  PolyMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(n - 1 - j, n - 1 - i);
  }
  return out;
}

std::string EntryMismatch::describe() const {
  std::ostringstream out;
  out << "entry (" << row << "," << col << "): got " << actual.to_string() << ", expected " << expected.to_string();
  return out.str();
}

std::optional<EntryMismatch> first_mismatch(const PolyMatrix& actual, const PolyMatrix& expected) {
  if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) {
    throw std::invalid_argument("first_mismatch: shape mismatch");
  }
  for (std::size_t i = 0; i < actual.rows(); ++i) {
    for (std::size_t j = 0; j < actual.cols(); ++j) {
      if (actual(i, j) != expected(i, j)) return EntryMismatch{i, j, actual(i, j), expected(i, j)};
    }
  }
  return std::nullopt;
}

}  // namespace jordan
