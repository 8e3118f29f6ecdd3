#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edbound/group_ops.hpp"
#include "edbound/perm_group.hpp"

namespace edbound {

/// Attached to every report.  The faithful-lattice bound is sometimes quoted
/// as rank(M) - n + 1, whereas the stabilizer-sum formula reported here is
/// exactly rank(M); the two readings differ by n - 1 = [G:H] - 1.
inline constexpr std::string_view kRankNote =
    "bound = sum [G:(H cap H^g_i)] - [G:H] + 1 equals rank(M) of the kernel lattice; "
    "the reading ed(A) <= rank(M) - n + 1 of the faithful-lattice bound would differ "
    "from it by n - 1 = [G:H] - 1, and is not applied";

struct Preconditions {
  bool core_trivial = false;
  bool condition_ii = false;     // not (G cyclic and H trivial)
  bool generates_over_h = false;
};

/// Witness data of the representative-optimization construction.
struct Section5Details {
  std::size_t r = 0;
  std::size_t quotient_degree = 0;           // [G:N]
  std::vector<Permutation> quotient_tuple;   // t_i, acting on cosets of N
  std::vector<Permutation> representatives;  // g_i with g_i N = t_i
  std::size_t h_prime_order = 0;             // |<H, H^g_1, ..., H^g_r>|
  std::size_t m = 0;                         // [N : H']
  std::vector<Permutation> transversal;      // n_1 = 1, ..., n_m
  std::int64_t csa_bound = 0;
  bool eq_n_verified = false;
  bool generation_verified = false;
};

struct BoundReport {
  std::string provenance;
  std::int64_t bound = 0;
  std::size_t degree = 0;
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0;
  std::size_t index = 0;  // [G:H]
  std::vector<Permutation> generating_tuple;
  std::vector<Permutation> dropped;  // tuple entries lying in H
  std::vector<std::size_t> stabilizer_indices;
  std::int64_t rank_M = 0;
  bool faithful = false;
  Preconditions preconditions;
  std::optional<Section5Details> section5;
  std::string note{kRankNote};

  bool valid() const {
    return faithful && rank_M == bound && preconditions.core_trivial &&
           preconditions.condition_ii && preconditions.generates_over_h;
  }
};

struct StabilizerIndex {
  std::size_t index = 0;         // [G : H cap H^g]
  std::size_t product_size = 0;  // |H H^g|
  bool identity_check = false;   // index = [G:H] |H H^g| / |H|, |H| divides |H H^g|
};

StabilizerIndex stabilizer_index(const Subgroup& H, const Permutation& g);
StabilizerIndex stabilizer_index(const Subgroup& H, std::size_t g);

/// Builds the exact sequence 0 -> M -> sum Z[G/S_i] -> omega(G/H) -> 0 for
/// the tuple (members of H dropped first) and returns the stabilizer-sum
/// bound.  Errors: kCoreNontrivial, kGenerationFailure, kConditionII, and
/// kFaithfulnessFailure (only on an implementation fault).
BoundReport thm_h_bound(const GroupPtr& G, const Subgroup& H, std::span<const Permutation> gens);

/// Minimum of thm_h_bound over all tuples of at most `max_s` elements that
/// generate G over H.  Ties go to the shorter tuple, then the smaller
/// element indices.
BoundReport optimal_thm_h_bound(const GroupPtr& G, const Subgroup& H, std::size_t max_s);

struct CsaBound {
  std::int64_t bound = 0;
  std::size_t r = 0;  // generators used for G/N, at least 1
  std::vector<Permutation> quotient_tuple;
  Quotient quotient;
};

/// r [G:H][N:H] - [G:H] + 1 with r the minimal generator count of G/N
/// (taken as 1 when N = G).  Errors: kHypothesis for H outside N or for
/// H = 1 with r = 1; kNotNormal; kCoreNontrivial.
CsaBound csa_bound_details(const GroupPtr& G, const Subgroup& H, const Subgroup& N);
std::int64_t csa_bound(const GroupPtr& G, const Subgroup& H, const Subgroup& N);

/// Picks representatives g_i of a minimal generating tuple of G/N so that
/// <H, H^g_1, ..., H^g_r> is as large as possible, bounds G over H with the
/// products g_i n_j, and checks every step against csa_bound.  Any failed
/// check is kInternal.
BoundReport section5_bound(const GroupPtr& G, const Subgroup& H, const Subgroup& N);

/// 2 n^2 / p^2 - n + 1 for n = p^s.  kHypothesis unless p is prime and
/// s >= 2; kCapExceeded on 64-bit overflow.
std::int64_t pgl_bound(std::int64_t p, std::int64_t s);

struct ComparisonRow {
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t n = 0;
  std::optional<std::int64_t> odd_bound;  // (n-1)(n-2)/2, odd n >= 5
  std::int64_t quadratic_bound = 0;       // n^2 - 3n + 1, n >= 4
  std::int64_t earlier_bound = 0;         // p^(2s-1) - p^s + 1
  std::int64_t new_bound = 0;             // pgl_bound(p, s)
  std::int64_t prior_min = 0;
  std::int64_t minimum = 0;
};

ComparisonRow compare_bounds(std::int64_t p, std::int64_t s);

bool is_prime(std::int64_t n);

}  // namespace edbound
