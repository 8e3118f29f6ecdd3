#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace edbound {

/// Outcome of one exhaustive or randomized verification run.
struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures{};  // first few messages only
  // Bound reports produced along the way and their cross-checks.
  std::size_t reports = 0;
  std::size_t rank_matches = 0;
  std::size_t notes = 0;
  double seconds = 0.0;

  bool passed() const noexcept { return failed == 0; }
  void check(bool ok, const std::function<std::string()>& describe);
};

/// Lagrange, product formula, cores, coset-action kernels, conjugation and
/// quotient orders over the catalog.  Subgroup-lattice checks stop at 24.
SuiteResult verify_group(std::size_t max_order);

/// Normal-form equations, unimodularity, ranks and kernel saturation on
/// random integer matrices.
SuiteResult verify_lattice(std::size_t samples, std::uint64_t seed);

/// Faithfulness of G on the kernel lattice versus the single-summand
/// prediction, for every core-free H and tuples of at most two coset
/// representatives.
SuiteResult verify_lemma32(std::size_t max_order);

/// G_V is a subgroup containing H, for random G-stable V and for every
/// single-orbit submodule.
SuiteResult verify_lemma43(std::size_t max_order, std::size_t random_samples, std::uint64_t seed);

/// Span of {g_i H - H} under Z[G] is omega(G/H) exactly when the g_i
/// generate G over H.
SuiteResult verify_generation(std::size_t max_order);

/// [G : H cap H^g] = [G:H] |H H^g| / |H| for every subgroup H and g.
SuiteResult verify_remark42(std::size_t max_order);

/// The representative-optimization construction on fixed instances and on
/// every admissible (G, H, N).
SuiteResult verify_section5(std::size_t max_order);

inline constexpr std::string_view kSuiteNames[] = {"group",  "lattice",    "lemma32", "lemma43",
                                                   "remark42", "section5", "generation"};

/// Runs a suite by name.  kValidation for an unknown name.
SuiteResult run_suite(std::string_view name, std::size_t max_order);

}  // namespace edbound
