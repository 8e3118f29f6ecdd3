#include "edbound/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "edbound/error.hpp"

namespace edbound {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::kDegreeMismatch, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntVector IntMatrix::row_vector(std::size_t r) const {
  auto view = row(r);
  return IntVector(view.begin(), view.end());
}

void IntMatrix::append_row(std::span<const Integer> values) {
  if (values.size() != cols_) {
    fail(ErrorCode::kDegreeMismatch, "row of length " + std::to_string(values.size()) +
                                         " appended to a matrix with " + std::to_string(cols_) +
                                         " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

IntMatrix IntMatrix::row_range(std::size_t first, std::size_t last) const {
  IntMatrix m(last - first, cols_);
  for (std::size_t r = first; r < last; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r - first, c) = (*this)(r, c);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c);
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorCode::kDegreeMismatch, "matrix product dimension mismatch");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

IntVector operator*(std::span<const Integer> v, const IntMatrix& a) {
  if (v.size() != a.rows()) fail(ErrorCode::kDegreeMismatch, "vector-matrix dimension mismatch");
  IntVector out(a.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(k, j) != 0) out[j] += v[k] * a(k, j);
    }
  }
  return out;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (v.size() != a.cols()) fail(ErrorCode::kDegreeMismatch, "matrix-vector dimension mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0 && a(i, k) != 0) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::kDegreeMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace edbound
