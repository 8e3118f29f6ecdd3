#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace edbound {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Every row must have exactly `cols` entries.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  IntVector row_vector(std::size_t r) const;

  void append_row(std::span<const Integer> values);
  void swap_rows(std::size_t a, std::size_t b);
  /// Rows [first, last).
  IntMatrix row_range(std::size_t first, std::size_t last) const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Row vector times matrix.
IntVector operator*(std::span<const Integer> v, const IntMatrix& a);
/// Matrix times column vector.
IntVector operator*(const IntMatrix& a, std::span<const Integer> v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

}  // namespace edbound
