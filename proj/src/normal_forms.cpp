#include "edbound/normal_forms.hpp"

#include <gmp.h>

#include "edbound/error.hpp"

namespace edbound {

namespace {

// row[target] -= q * row[source], from column `from` on.
void sub_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q,
             std::size_t from = 0) {
  for (std::size_t c = from; c < m.cols(); ++c) {
    if (m(source, c) != 0) m(target, c) -= q * m(source, c);
  }
}

void sub_col(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m(r, source) != 0) m(r, target) -= q * m(r, source);
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.rows()), {}};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  const std::size_t m = h.rows();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < h.cols() && pivot_row < m; ++c) {
    // Euclidean elimination below the pivot row.
    while (true) {
      std::size_t best = m;
      for (std::size_t r = pivot_row; r < m; ++r) {
        if (h(r, c) != 0 && (best == m || abs(h(r, c)) < abs(h(best, c)))) best = r;
      }
      if (best == m) break;
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < m; ++r) {
        if (h(r, c) == 0) continue;
        Integer q = floor_div(h(r, c), h(pivot_row, c));
        sub_row(h, r, pivot_row, q, c);
        sub_row(u, r, pivot_row, q);
        if (h(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pivot_row, c) == 0) continue;
    if (h(pivot_row, c) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q = floor_div(h(r, c), h(pivot_row, c));
      if (q == 0) continue;
      sub_row(h, r, pivot_row, q, c);
      sub_row(u, r, pivot_row, q);
    }
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  return out;
}

std::vector<Integer> SmithForm::elementary_divisors() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm out{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), 0};
  IntMatrix& s = out.S;
  const std::size_t m = s.rows();
  const std::size_t n = s.cols();
  std::size_t t = 0;
  while (t < m && t < n) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = m, pc = n;
    for (std::size_t r = t; r < m; ++r) {
      for (std::size_t c = t; c < n; ++c) {
        if (s(r, c) != 0 && (pr == m || abs(s(r, c)) < abs(s(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == m) break;
    s.swap_rows(t, pr);
    out.U.swap_rows(t, pr);
    swap_cols(s, t, pc);
    swap_cols(out.V, t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (s(r, t) == 0) continue;
        Integer q = floor_div(s(r, t), s(t, t));
        sub_row(s, r, t, q);
        sub_row(out.U, r, t, q);
        if (s(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (s(t, c) == 0) continue;
        Integer q = floor_div(s(t, c), s(t, t));
        sub_col(s, c, t, q);
        sub_col(out.V, c, t, q);
        if (s(t, c) != 0) clean = false;
      }
      if (clean) {
        // Divisibility: fold an offending row into the pivot row.
        std::size_t bad = m;
        for (std::size_t r = t + 1; r < m && bad == m; ++r) {
          for (std::size_t c = t + 1; c < n; ++c) {
            if (s(r, c) % s(t, t) != 0) {
              bad = r;
              break;
            }
          }
        }
        if (bad == m) break;
        sub_row(s, t, bad, Integer(-1));
        sub_row(out.U, t, bad, Integer(-1));
        continue;
      }
      // Move the smallest remaining entry of row/column t to the pivot.
      std::size_t br = t, bc = t;
      for (std::size_t r = t; r < m; ++r) {
        if (s(r, t) != 0 && abs(s(r, t)) < abs(s(br, bc))) { br = r; bc = t; }
      }
      for (std::size_t c = t; c < n; ++c) {
        if (s(t, c) != 0 && abs(s(t, c)) < abs(s(br, bc))) { br = t; bc = c; }
      }
      s.swap_rows(t, br);
      out.U.swap_rows(t, br);
      swap_cols(s, t, bc);
      swap_cols(out.V, t, bc);
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(out.U, t);
    }
    ++t;
  }
  out.rank = t;
  return out;
}

IntMatrix row_basis(const IntMatrix& a) {
  HermiteForm f = hermite_normal_form(a);
  return f.H.row_range(0, f.rank());
}

std::size_t rank(const IntMatrix& a) { return hermite_normal_form(a).rank(); }

IntMatrix kernel_basis(const IntMatrix& a) {
  HermiteForm f = hermite_normal_form(a);
  // The trailing rows of a unimodular U annihilate A and extend to a basis
  // of Z^rows, so their span is saturated.
  IntMatrix k = f.U.row_range(f.rank(), a.rows());
  return row_basis(k);
}

RowSpanSolver::RowSpanSolver(const IntMatrix& a) : cols_(a.cols()), form_(hermite_normal_form(a)) {}

std::optional<IntVector> RowSpanSolver::solve(std::span<const Integer> v) const {
  if (v.size() != cols_) {
    fail(ErrorCode::kDegreeMismatch, "vector of length " + std::to_string(v.size()) +
                                         " tested against a lattice in dimension " +
                                         std::to_string(cols_));
  }
  const IntMatrix& h = form_.H;
  IntVector rest(v.begin(), v.end());
  IntVector y(h.rows());
  for (std::size_t i = 0; i < form_.rank(); ++i) {
    const std::size_t c = form_.pivot_cols[i];
    if (rest[c] == 0) continue;
    if (rest[c] % h(i, c) != 0) return std::nullopt;
    y[i] = rest[c] / h(i, c);
    for (std::size_t j = c; j < cols_; ++j) {
      if (h(i, j) != 0) rest[j] -= y[i] * h(i, j);
    }
  }
  for (const auto& x : rest) {
    if (x != 0) return std::nullopt;
  }
  return std::span<const Integer>(y) * form_.U;
}

std::optional<IntVector> solve_row_combination(const IntMatrix& a, std::span<const Integer> v) {
  return RowSpanSolver(a).solve(v);
}

bool in_row_span(const IntMatrix& a, std::span<const Integer> v) {
  return solve_row_combination(a, v).has_value();
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) {
    fail(ErrorCode::kDegreeMismatch, "lattices live in different ambient dimensions");
  }
  return row_basis(a) == row_basis(b);
}

}  // namespace edbound
