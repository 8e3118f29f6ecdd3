#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "edbound/int_matrix.hpp"

namespace edbound {

/// Row-style Hermite normal form: U * A = H with U unimodular, H in echelon
/// form with positive pivots and entries above each pivot in [0, pivot).
/// Zero rows of H come last.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// U * A * V = S with S diagonal, d_1 | d_2 | ..., nonnegative.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<Integer> elementary_divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero rows of the Hermite form: the canonical basis of the row span.
IntMatrix row_basis(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Saturated Hermite-reduced Z-basis (as rows) of {v : v * A = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Some integer x with x * A = v, or nullopt when v is outside the row span.
/// Throws kDegreeMismatch on a length mismatch.
std::optional<IntVector> solve_row_combination(const IntMatrix& a, std::span<const Integer> v);

bool in_row_span(const IntMatrix& a, std::span<const Integer> v);

/// Row spans over the integers coincide.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

/// Solver bound to one fixed matrix, reusing its Hermite form.
class RowSpanSolver {
 public:
  explicit RowSpanSolver(const IntMatrix& a);
  std::optional<IntVector> solve(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const { return solve(v).has_value(); }
  const HermiteForm& hermite() const noexcept { return form_; }

 private:
  std::size_t cols_;
  HermiteForm form_;
};

}  // namespace edbound
