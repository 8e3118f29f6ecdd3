#include <gtest/gtest.h>

#include <gmpxx.h>

#include <random>

#include "edbound/error.hpp"
#include "edbound/normal_forms.hpp"

namespace edbound {
namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  }
  return m;
}

// Rational reduced row echelon nullspace of {v : v A = 0}, i.e. the column
// nullspace of A^T, scaled to primitive integer vectors.
std::vector<IntVector> rational_left_nullspace(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[j][i] = a(i, j);
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && t[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(t[p], t[row]);
    const mpq_class lead = t[row][col];
    for (auto& x : t[row]) x /= lead;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || t[r][col] == 0) continue;
      const mpq_class f = t[r][col];
      for (std::size_t k = 0; k < n; ++k) t[r][k] -= f * t[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<IntVector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<mpq_class> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -t[r][free];
    mpz_class den = 1;
    for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
    IntVector iv(n);
    mpz_class g = 0;
    for (std::size_t k = 0; k < n; ++k) {
      iv[k] = mpz_class(v[k] * den);
      g = gcd(g, iv[k]);
    }
    for (auto& x : iv) x /= g;
    out.push_back(iv);
  }
  return out;
}

bool is_unimodular(const IntMatrix& u) {
  const Integer d = determinant(u);
  return d == 1 || d == -1;
}

TEST(Hermite, SmallExample) {
  const IntMatrix a{{2, 4}, {1, 3}};
  const HermiteForm h = hermite_normal_form(a);
  EXPECT_EQ(h.H, (IntMatrix{{1, 1}, {0, 2}}));
  EXPECT_EQ(h.U * a, h.H);
  EXPECT_TRUE(is_unimodular(h.U));
  EXPECT_TRUE(lattice_equal(h.H, IntMatrix{{1, 3}, {0, 2}}));
}

TEST(Hermite, RandomShapeInvariants) {
  std::mt19937 rng(3);
  for (int t = 0; t < 150; ++t) {
    const IntMatrix a = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 9);
    const HermiteForm h = hermite_normal_form(a);
    ASSERT_EQ(h.U * a, h.H);
    ASSERT_TRUE(is_unimodular(h.U));
    std::size_t last = 0;
    for (std::size_t r = 0; r < h.rank(); ++r) {
      const std::size_t pc = h.pivot_cols[r];
      if (r > 0) ASSERT_GT(pc, last);
      last = pc;
      ASSERT_GT(h.H(r, pc), 0);
      for (std::size_t c = 0; c < pc; ++c) ASSERT_EQ(h.H(r, c), 0);
      for (std::size_t above = 0; above < r; ++above) {
        ASSERT_GE(h.H(above, pc), 0);
        ASSERT_LT(h.H(above, pc), h.H(r, pc));
      }
    }
    for (std::size_t r = h.rank(); r < h.H.rows(); ++r) {
      for (std::size_t c = 0; c < h.H.cols(); ++c) ASSERT_EQ(h.H(r, c), 0);
    }
    // Canonical: reordering and unimodular mixing do not change H.
    IntMatrix b = a;
    if (b.rows() > 1) b.swap_rows(0, b.rows() - 1);
    ASSERT_EQ(row_basis(b), row_basis(a));
  }
}

TEST(Smith, SmallExample) {
  const IntMatrix a{{2, 0}, {0, 3}};
  const SmithForm s = smith_normal_form(a);
  EXPECT_EQ(s.S, (IntMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ(s.U * a * s.V, s.S);
  EXPECT_EQ(s.elementary_divisors(), (std::vector<Integer>{1, 6}));
}

TEST(Smith, RandomDivisibilityAndDeterminant) {
  std::mt19937 rng(5);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + rng() % 5;
    const std::size_t c = 1 + rng() % 5;
    const IntMatrix a = random_matrix(rng, r, c, 12);
    const SmithForm s = smith_normal_form(a);
    ASSERT_EQ(s.U * a * s.V, s.S);
    ASSERT_TRUE(is_unimodular(s.U));
    ASSERT_TRUE(is_unimodular(s.V));
    ASSERT_EQ(s.rank, rank(a));
    const auto d = s.elementary_divisors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      ASSERT_GT(d[i], 0);
      ASSERT_EQ(d[i + 1] % d[i], 0);
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j) ASSERT_EQ(s.S(i, j), 0);
      }
    }
    if (r == c) {
      Integer prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.S(i, i);
      ASSERT_EQ(abs(prod), abs(determinant(a)));
    }
  }
}

TEST(Kernel, MatchesRationalNullspace) {
  std::mt19937 rng(8);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + rng() % 6;
    const std::size_t c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, 6);
    if (t % 3 == 0 && r > 1) {
      // Force a dependency with a non-unit multiplier.
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = 2 * a(0, j);
    }
    const IntMatrix k = kernel_basis(a);
    const auto oracle = rational_left_nullspace(a);
    ASSERT_EQ(k.rows(), oracle.size());
    ASSERT_EQ(k.rows(), r - rank(a));
    ASSERT_TRUE((k * a).is_zero());
    for (const auto& v : oracle) ASSERT_TRUE(in_row_span(k, v)) << a.to_string();
    // Saturated: all elementary divisors equal 1.
    if (k.rows() > 0) {
      for (const auto& d : smith_normal_form(k).elementary_divisors()) ASSERT_EQ(d, 1);
      ASSERT_EQ(k, row_basis(k));
    }
  }
}

TEST(RowSpan, Membership) {
  EXPECT_FALSE(in_row_span(IntMatrix{{2}}, IntVector{1}));
  EXPECT_TRUE(in_row_span(IntMatrix{{2}}, IntVector{-4}));
  const IntMatrix a{{1, 2, 3}, {0, 3, 6}};
  const IntVector v{2, 7, 12};
  const auto x = solve_row_combination(a, v);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(std::span<const Integer>(*x) * a, v);
  EXPECT_FALSE(in_row_span(a, IntVector{0, 1, 2}));
  try {
    in_row_span(a, IntVector{1, 2});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeMismatch);
  }
  const RowSpanSolver solver(a);
  EXPECT_TRUE(solver.contains(v));
  EXPECT_FALSE(solver.contains(IntVector{0, 0, 1}));
}

TEST(LatticeEqual, Properties) {
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix a = random_matrix(rng, n, n + rng() % 3, 7);
    IntMatrix perm = a;
    if (n > 1) perm.swap_rows(0, n - 1);
    ASSERT_TRUE(lattice_equal(a, perm));
    IntMatrix twice = a;
    for (std::size_t i = 0; i < twice.rows(); ++i) {
      for (auto& x : twice.row(i)) x *= 2;
    }
    if (rank(a) > 0) ASSERT_FALSE(lattice_equal(a, twice));
    // U with det 1: identity plus a strictly upper triangular part.
    IntMatrix u = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) u(i, j) = static_cast<long>(rng() % 7) - 3;
    }
    ASSERT_TRUE(lattice_equal(a, u * a));
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
}

}  // namespace
}  // namespace edbound
