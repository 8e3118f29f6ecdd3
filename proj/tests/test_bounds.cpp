#include <gtest/gtest.h>

#include <functional>
#include <optional>

#include "edbound/bounds.hpp"
#include "edbound/catalog.hpp"
#include "edbound/error.hpp"
#include "oracle.hpp"

namespace edbound {
namespace {

Permutation P(const char* text, std::size_t degree) { return parse_cycles(text, degree); }

oracle::PermSet as_set(const Subgroup& H) {
  const auto e = H.elements();
  return {e.begin(), e.end()};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an edbound::Error";
  return ErrorCode::kInternal;
}

struct D4 {
  GroupPtr G = dihedral_group(4);
  Subgroup H = Subgroup::generated(G, std::vector{P("(2 4)", 4)});
  Subgroup N = Subgroup::generated(G, std::vector{P("(2 4)", 4), P("(1 3)", 4)});
};

TEST(StabilizerIndex, Examples) {
  D4 d;
  const auto r = stabilizer_index(d.H, P("(1 2 3 4)", 4));
  EXPECT_EQ(r.index, 8u);
  EXPECT_EQ(r.product_size, 4u);
  EXPECT_TRUE(r.identity_check);
  const auto same = stabilizer_index(d.H, P("(1 3)", 4));
  EXPECT_EQ(same.index, 4u);
  EXPECT_EQ(same.product_size, 2u);
}

TEST(ThmH, SmallBounds) {
  auto S3 = symmetric_group(3);
  const auto H = Subgroup::generated(S3, std::vector{P("(1 2)", 3)});
  const BoundReport r = thm_h_bound(S3, H, std::vector{P("(1 2 3)", 3)});
  EXPECT_EQ(r.bound, 4);
  EXPECT_EQ(r.rank_M, 4);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.note, kRankNote);

  D4 d;
  const BoundReport r4 = thm_h_bound(d.G, d.H, std::vector{P("(1 2 3 4)", 4)});
  EXPECT_EQ(r4.bound, 5);
  EXPECT_EQ(r4.stabilizer_indices, (std::vector<std::size_t>{8}));
  EXPECT_TRUE(r4.valid());
}

TEST(ThmH, DropsMembersOfH) {
  D4 d;
  const BoundReport r = thm_h_bound(d.G, d.H, std::vector{P("(2 4)", 4), P("(1 2 3 4)", 4)});
  EXPECT_EQ(r.dropped, (std::vector{P("(2 4)", 4)}));
  EXPECT_EQ(r.generating_tuple, (std::vector{P("(1 2 3 4)", 4)}));
  EXPECT_EQ(r.bound, 5);
}

TEST(ThmH, Errors) {
  auto C3 = cyclic_group(3);
  EXPECT_EQ(code_of([&] { thm_h_bound(C3, Subgroup::trivial(C3), C3->generators()); }),
            ErrorCode::kConditionII);
  D4 d;
  EXPECT_EQ(code_of([&] { thm_h_bound(d.G, d.N, std::vector{P("(1 2 3 4)", 4)}); }),
            ErrorCode::kCoreNontrivial);
  EXPECT_EQ(code_of([&] { thm_h_bound(d.G, d.H, std::vector{P("(1 3)", 4)}); }),
            ErrorCode::kGenerationFailure);
}

TEST(ThmH, AgreesWithOracleAndIsTranslationInvariant) {
  for (const auto& [name, G] : catalog(16)) {
    const oracle::PermSet gs(G->elements().begin(), G->elements().end());
    for (const auto& H : all_subgroups(G)) {
      if (!normal_core(H).is_trivial() || (H.is_trivial() && is_cyclic(*G))) continue;
      for (std::size_t a = 0; a < G->order(); ++a) {
        if (H.contains_index(a)) continue;
        const std::vector<Permutation> tuple{G->element(a)};
        if (!generates_over(H, tuple)) continue;
        const BoundReport r = thm_h_bound(G, H, tuple);
        ASSERT_EQ(r.bound, oracle::stabilizer_sum_bound(gs, as_set(H), tuple)) << name;
        ASSERT_TRUE(r.valid()) << name;
        // Replacing g by g h with h in H changes neither H^g nor the bound.
        for (std::size_t h : H.indices()) {
          const std::vector<Permutation> moved{G->element(G->mul(a, h))};
          ASSERT_EQ(thm_h_bound(G, H, moved).bound, r.bound) << name;
        }
      }
    }
  }
}

TEST(Optimal, SmallBounds) {
  auto S3 = symmetric_group(3);
  const auto H = Subgroup::generated(S3, std::vector{P("(1 2)", 3)});
  EXPECT_EQ(optimal_thm_h_bound(S3, H, 2).bound, 4);
  D4 d;
  const BoundReport r = optimal_thm_h_bound(d.G, d.H, 2);
  EXPECT_EQ(r.bound, 5);
  EXPECT_EQ(r.generating_tuple.size(), 1u);
}

TEST(Optimal, NeverWorseThanAnySingleOrPairTuple) {
  for (const auto& [name, G] : catalog(12)) {
    for (const auto& H : all_subgroups(G)) {
      if (!normal_core(H).is_trivial() || (H.is_trivial() && is_cyclic(*G)) || H.is_whole()) continue;
      const oracle::PermSet gs(G->elements().begin(), G->elements().end());
      std::optional<BoundReport> found;
      try {
        found = optimal_thm_h_bound(G, H, 2);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kGenerationFailure) << name;
      }
      if (!found) {
        // Then no pair may generate G over H.
        for (std::size_t a = 0; a < G->order(); ++a) {
          for (std::size_t b = a; b < G->order(); ++b) {
            ASSERT_FALSE(generates_over(H, std::vector{G->element(a), G->element(b)})) << name;
          }
        }
        continue;
      }
      const BoundReport& best = *found;
      ASSERT_TRUE(best.valid());
      for (std::size_t a = 0; a < G->order(); ++a) {
        for (std::size_t b = a; b < G->order(); ++b) {
          const std::vector<Permutation> tuple{G->element(a), G->element(b)};
          if (!generates_over(H, tuple)) continue;
          ASSERT_LE(best.bound, oracle::stabilizer_sum_bound(gs, as_set(H), tuple)) << name;
        }
      }
    }
  }
}

TEST(Csa, DihedralExample) {
  D4 d;
  const CsaBound c = csa_bound_details(d.G, d.H, d.N);
  EXPECT_EQ(c.bound, 5);
  EXPECT_EQ(c.r, 1u);
  EXPECT_EQ(csa_bound(d.G, d.H, d.N), 5);
  EXPECT_EQ(code_of([&] { csa_bound(d.G, d.N, d.H); }), ErrorCode::kHypothesis);
}

TEST(Section5, DihedralExample) {
  D4 d;
  const BoundReport r = section5_bound(d.G, d.H, d.N);
  EXPECT_EQ(r.bound, 5);
  ASSERT_TRUE(r.section5.has_value());
  const auto& s = *r.section5;
  EXPECT_EQ(s.csa_bound, 5);
  EXPECT_EQ(s.h_prime_order, 4u);
  EXPECT_EQ(s.m, 1u);
  EXPECT_TRUE(s.eq_n_verified);
  EXPECT_TRUE(s.generation_verified);
  EXPECT_TRUE(r.valid());
  // Both (1 2)(3 4) and (1 2 3 4) lift the quotient generator and reach
  // |H'| = 4; the first in element order is kept.
  EXPECT_EQ(s.representatives, (std::vector{P("(1 2)(3 4)", 4)}));
  const Permutation g = P("(1 2 3 4)", 4);
  const Permutation r2 = P("(2 4)", 4);
  const auto alt = Subgroup::generated(d.G, std::vector{r2, g * r2 * g.inverse()});
  EXPECT_EQ(alt.order(), s.h_prime_order);
}

TEST(Pgl, Values) {
  EXPECT_EQ(pgl_bound(2, 2), 5);
  EXPECT_EQ(pgl_bound(3, 2), 10);
  EXPECT_EQ(pgl_bound(2, 3), 25);
  for (std::int64_t p : {2, 3, 5, 7}) EXPECT_EQ(pgl_bound(p, 2), p * p + 1);
  EXPECT_EQ(code_of([] { pgl_bound(4, 2); }), ErrorCode::kHypothesis);
  EXPECT_EQ(code_of([] { pgl_bound(3, 1); }), ErrorCode::kHypothesis);
  EXPECT_EQ(code_of([] { pgl_bound(2, 40); }), ErrorCode::kCapExceeded);
}

TEST(Compare, KnownRows) {
  const ComparisonRow r = compare_bounds(3, 3);
  EXPECT_EQ(r.n, 27);
  EXPECT_EQ(r.odd_bound, 325);
  EXPECT_EQ(r.quadratic_bound, 649);
  EXPECT_EQ(r.earlier_bound, 217);
  EXPECT_EQ(r.new_bound, 136);
  EXPECT_EQ(r.prior_min, 217);
  EXPECT_EQ(r.minimum, 136);
  for (std::int64_t s : {2, 3, 4}) {
    const ComparisonRow two = compare_bounds(2, s);
    EXPECT_FALSE(two.odd_bound.has_value());
    EXPECT_EQ(two.new_bound, two.earlier_bound);
  }
}

TEST(Primes, Small) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

}  // namespace
}  // namespace edbound
