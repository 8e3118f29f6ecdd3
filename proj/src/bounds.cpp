#include "edbound/bounds.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "edbound/error.hpp"
#include "edbound/glattice.hpp"
#include "edbound/normal_forms.hpp"

namespace edbound {

namespace {

Subgroup rebase(const GroupPtr& G, const Subgroup& H) {
  return left_coset_space(G, H).subgroup();
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::kCapExceeded, "bound overflows 64 bits");
  return out;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

void require_core_free(const Subgroup& H) {
  if (!normal_core(H).is_trivial()) {
    fail(ErrorCode::kCoreNontrivial, "H contains a nontrivial normal subgroup of G");
  }
}

void require_condition_ii(const PermGroup& G, const Subgroup& H) {
  if (H.is_trivial() && is_cyclic(G)) {
    fail(ErrorCode::kConditionII, "condition (ii) fails: G is cyclic and H is trivial");
  }
}

}  // namespace

StabilizerIndex stabilizer_index(const Subgroup& H, std::size_t g) {
  const auto& G = H.parent();
  Subgroup conj = conjugate_subgroup(H, g);
  StabilizerIndex out;
  out.index = G->order() / intersect(H, conj).order();
  out.product_size = product_set_size(H, conj);
  out.identity_check = out.product_size % H.order() == 0 &&
                       out.index == H.index() * (out.product_size / H.order());
  return out;
}

StabilizerIndex stabilizer_index(const Subgroup& H, const Permutation& g) {
  return stabilizer_index(H, H.parent()->require_index(g));
}

BoundReport thm_h_bound(const GroupPtr& G, const Subgroup& H_in, std::span<const Permutation> gens) {
  const Subgroup H = rebase(G, H_in);
  BoundReport report;
  report.provenance = "thm_h";
  report.degree = G->degree();
  report.group_order = G->order();
  report.subgroup_order = H.order();
  report.index = H.index();

  require_core_free(H);
  report.preconditions.core_trivial = true;

  for (const auto& g : gens) {
    G->require_index(g);
    (H.contains(g) ? report.dropped : report.generating_tuple).push_back(g);
  }
  if (!generates_over(H, report.generating_tuple)) {
    fail(ErrorCode::kGenerationFailure, "the tuple does not generate G over H");
  }
  report.preconditions.generates_over_h = true;
  require_condition_ii(*G, H);
  report.preconditions.condition_ii = true;

  PhiData data = phi_matrix(G, H, report.generating_tuple);
  KernelModule M = kernel_module(data.P, data.phi);
  report.faithful = action_kernel(M.lattice).is_trivial();
  if (!report.faithful) {
    fail(ErrorCode::kFaithfulnessFailure, "G does not act faithfully on the kernel lattice");
  }

  std::int64_t sum = 0;
  for (std::size_t i = 0; i < data.stabs.size(); ++i) {
    StabilizerIndex term = stabilizer_index(H, report.generating_tuple[i]);
    if (!term.identity_check || term.index != data.stabs[i].index()) {
      fail(ErrorCode::kInternal, "stabilizer index factorization fails for " +
                                     report.generating_tuple[i].to_cycles());
    }
    report.stabilizer_indices.push_back(term.index);
    sum += static_cast<std::int64_t>(term.index);
  }
  report.bound = sum - static_cast<std::int64_t>(report.index) + 1;
  report.rank_M = static_cast<std::int64_t>(M.lattice.rank());
  if (report.rank_M != report.bound) {
    fail(ErrorCode::kInternal, "rank(M) = " + std::to_string(report.rank_M) +
                                   " differs from the stabilizer-sum bound " +
                                   std::to_string(report.bound));
  }
  return report;
}

namespace {

struct TupleSearch {
  const GroupPtr& G;
  const Subgroup& H;
  std::size_t max_s;
  std::vector<std::int64_t> term{};  // per element, 0 for members of H
  std::int64_t min_term = 0;
  std::int64_t offset = 0;         // -[G:H] + 1

  std::vector<std::size_t> tuple{};
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::size_t> best_tuple{};

  bool better(std::int64_t bound) const {
    if (bound != best) return bound < best;
    if (tuple.size() != best_tuple.size()) return tuple.size() < best_tuple.size();
    return tuple < best_tuple;
  }

  void visit(std::size_t start, const Subgroup& span, std::int64_t partial) {
    if (span.is_whole()) {
      if (!tuple.empty() && better(partial + offset)) {
        best = partial + offset;
        best_tuple = tuple;
      }
      return;
    }
    if (tuple.size() == max_s) return;
    // Any completion adds at least one more positive term.
    if (partial + min_term + offset > best) return;
    for (std::size_t c = start; c < G->order(); ++c) {
      if (span.contains_index(c)) continue;
      if (partial + term[c] + offset > best) continue;
      tuple.push_back(c);
      std::vector<std::size_t> gens = tuple;
      for (const auto& h : H.generators()) gens.push_back(G->require_index(h));
      visit(c + 1, Subgroup::generated_by_indices(G, gens), partial + term[c]);
      tuple.pop_back();
    }
  }
};

}  // namespace

BoundReport optimal_thm_h_bound(const GroupPtr& G, const Subgroup& H_in, std::size_t max_s) {
  const Subgroup H = rebase(G, H_in);
  if (max_s == 0) fail(ErrorCode::kHypothesis, "max_s must be at least 1");
  require_core_free(H);
  require_condition_ii(*G, H);

  TupleSearch search{G, H, max_s};
  search.term.assign(G->order(), 0);
  search.min_term = std::numeric_limits<std::int64_t>::max();
  // Terms depend only on the coset g N_G(H); memoize per conjugate subgroup.
  std::vector<std::pair<std::vector<std::size_t>, std::int64_t>> memo;
  for (std::size_t g = 0; g < G->order(); ++g) {
    if (H.contains_index(g)) continue;
    Subgroup conj = conjugate_subgroup(H, g);
    auto hit = std::find_if(memo.begin(), memo.end(),
                            [&](const auto& e) { return e.first == conj.indices(); });
    if (hit == memo.end()) {
      const auto idx = static_cast<std::int64_t>(G->order() / intersect(H, conj).order());
      memo.emplace_back(conj.indices(), idx);
      hit = memo.end() - 1;
    }
    search.term[g] = hit->second;
    search.min_term = std::min(search.min_term, hit->second);
  }
  search.offset = 1 - static_cast<std::int64_t>(H.index());
  search.visit(1, H, 0);
  if (search.best_tuple.empty()) {
    fail(ErrorCode::kGenerationFailure,
         "no tuple of at most " + std::to_string(max_s) + " elements generates G over H");
  }
  std::vector<Permutation> tuple;
  for (std::size_t i : search.best_tuple) tuple.push_back(G->element(i));
  BoundReport report = thm_h_bound(G, H, tuple);
  report.provenance = "optimal_thm_h";
  if (report.bound != search.best) fail(ErrorCode::kInternal, "optimizer and evaluator disagree");
  return report;
}

CsaBound csa_bound_details(const GroupPtr& G, const Subgroup& H_in, const Subgroup& N_in) {
  const Subgroup H = rebase(G, H_in);
  const Subgroup N = rebase(G, N_in);
  if (!H.is_subset_of(N)) fail(ErrorCode::kHypothesis, "H is not contained in N");
  if (!is_normal(N)) fail(ErrorCode::kNotNormal, "N is not normal in G");
  require_core_free(H);

  CsaBound out;
  out.quotient = quotient(N);
  MinGenerators mg = min_generators(out.quotient.group);
  out.quotient_tuple = mg.witness;
  if (out.quotient_tuple.empty()) {
    // The trivial quotient is generated by its identity.
    out.quotient_tuple.push_back(out.quotient.group->element(0));
  }
  out.r = out.quotient_tuple.size();
  if (H.is_trivial() && out.r < 2) {
    fail(ErrorCode::kHypothesis, "H is trivial and G/N is cyclic (r = 1)");
  }
  const auto gh = static_cast<std::int64_t>(H.index());
  const auto nh = static_cast<std::int64_t>(N.order() / H.order());
  out.bound = checked_mul(checked_mul(static_cast<std::int64_t>(out.r), gh), nh) - gh + 1;
  return out;
}

std::int64_t csa_bound(const GroupPtr& G, const Subgroup& H, const Subgroup& N) {
  return csa_bound_details(G, H, N).bound;
}

BoundReport section5_bound(const GroupPtr& G, const Subgroup& H_in, const Subgroup& N_in) {
  const Subgroup H = rebase(G, H_in);
  const Subgroup N = rebase(G, N_in);
  CsaBound csa = csa_bound_details(G, H, N);
  const std::size_t r = csa.r;

  // Candidates for each g_i: the coset t_i of N, in element order.
  std::vector<std::vector<std::size_t>> cosets(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t t = csa.quotient.group->require_index(csa.quotient_tuple[i]);
    for (std::size_t g = 0; g < G->order(); ++g) {
      if (csa.quotient.projection[g] == t) cosets[i].push_back(g);
    }
  }

  std::vector<std::size_t> h_gens;
  for (const auto& h : H.generators()) h_gens.push_back(G->require_index(h));
  auto h_prime = [&](const std::vector<std::size_t>& reps) {
    std::vector<std::size_t> gens = h_gens;
    for (std::size_t g : reps) {
      for (std::size_t h : h_gens) gens.push_back(G->conj(g, h));
    }
    return Subgroup::generated_by_indices(G, gens);
  };

  // Odometer over the r-fold product of cosets; first maximizer wins.
  std::vector<std::size_t> pos(r, 0);
  std::vector<std::size_t> best_reps;
  std::size_t best_order = 0;
  while (true) {
    std::vector<std::size_t> reps(r);
    for (std::size_t i = 0; i < r; ++i) reps[i] = cosets[i][pos[i]];
    const std::size_t order = h_prime(reps).order();
    if (order > best_order) {
      best_order = order;
      best_reps = reps;
    }
    std::size_t i = r;
    while (i > 0 && ++pos[i - 1] == cosets[i - 1].size()) pos[--i] = 0;
    if (i == 0) break;
  }

  const Subgroup hp = h_prime(best_reps);
  if (!hp.is_subset_of(N)) fail(ErrorCode::kInternal, "H' is not contained in N");
  Section5Details details;
  details.r = r;
  details.quotient_degree = csa.quotient.group->degree();
  details.quotient_tuple = csa.quotient_tuple;
  for (std::size_t g : best_reps) details.representatives.push_back(G->element(g));
  details.h_prime_order = hp.order();
  details.m = N.order() / hp.order();
  details.csa_bound = csa.bound;
  const std::vector<std::size_t> transversal = left_transversal(N, hp);
  for (std::size_t n : transversal) details.transversal.push_back(G->element(n));

  // m [N : H^{g_i g} H]^{-1} <= 1, i.e. m |H^{g_i g} H| <= |N|, for g in N.
  for (std::size_t g_i : best_reps) {
    for (std::size_t g : N.indices()) {
      Subgroup conj = conjugate_subgroup(H, G->mul(g_i, g));
      if (details.m * product_set_size(conj, H) > N.order()) {
        fail(ErrorCode::kInternal, "maximality inequality fails at representative " +
                                       G->element(g_i).to_cycles() + " and " +
                                       G->element(g).to_cycles());
      }
    }
  }
  details.eq_n_verified = true;

  std::vector<Permutation> tuple;
  for (std::size_t g_i : best_reps) {
    for (std::size_t n : transversal) tuple.push_back(G->element(G->mul(g_i, n)));
  }
  if (!generates_over(H, tuple)) {
    fail(ErrorCode::kInternal, "the products g_i n_j do not generate G over H");
  }
  details.generation_verified = true;

  BoundReport report = thm_h_bound(G, H, tuple);
  report.provenance = "section5";
  if (report.bound > csa.bound) {
    fail(ErrorCode::kInternal, "bound " + std::to_string(report.bound) +
                                   " exceeds r[G:H][N:H] - [G:H] + 1 = " +
                                   std::to_string(csa.bound));
  }
  report.section5 = std::move(details);
  return report;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t pgl_bound(std::int64_t p, std::int64_t s) {
  if (!is_prime(p)) fail(ErrorCode::kHypothesis, std::to_string(p) + " is not prime");
  if (s < 2) fail(ErrorCode::kHypothesis, "s must be at least 2");
  // 2 n^2 / p^2 = 2 p^(2s-2).
  const std::int64_t n = checked_pow(p, s);
  return checked_mul(2, checked_pow(p, 2 * s - 2)) - n + 1;
}

ComparisonRow compare_bounds(std::int64_t p, std::int64_t s) {
  ComparisonRow row;
  row.p = p;
  row.s = s;
  row.new_bound = pgl_bound(p, s);
  row.n = checked_pow(p, s);
  const std::int64_t n = row.n;
  if (n % 2 == 1 && n >= 5) row.odd_bound = checked_mul(n - 1, n - 2) / 2;
  row.quadratic_bound = checked_mul(n, n) - 3 * n + 1;
  row.earlier_bound = checked_pow(p, 2 * s - 1) - n + 1;
  row.prior_min = std::min(row.quadratic_bound, row.earlier_bound);
  if (row.odd_bound) row.prior_min = std::min(row.prior_min, *row.odd_bound);
  row.minimum = std::min(row.prior_min, row.new_bound);
  return row;
}

}  // namespace edbound
