#include "edbound/group_ops.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "edbound/error.hpp"

namespace edbound {

namespace {

// Re-express H over G when it was built against a different parent object.
Subgroup rebase(const GroupPtr& G, const Subgroup& H) {
  if (H.parent() == G) return H;
  std::vector<std::size_t> idx;
  idx.reserve(H.order());
  for (const auto& h : H.elements()) {
    auto i = G->index_of(h);
    if (!i) fail(ErrorCode::kNotSubgroup, "element " + h.to_cycles() + " of H is not in G");
    idx.push_back(*i);
  }
  return Subgroup::from_indices(G, std::move(idx));
}

void require_same_parent(const Subgroup& H, const Subgroup& K) {
  if (H.parent() != K.parent()) {
    fail(ErrorCode::kParentMismatch, "subgroups belong to different parent groups");
  }
}

}  // namespace

CosetSpace::CosetSpace(GroupPtr group, Subgroup subgroup)
    : group_(std::move(group)), subgroup_(rebase(group_, subgroup)) {
  const std::size_t n = group_->order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  coset_of_.assign(n, kUnset);
  for (std::size_t g = 0; g < n; ++g) {
    if (coset_of_[g] != kUnset) continue;
    const std::size_t c = transversal_.size();
    transversal_.push_back(g);
    for (std::size_t h : subgroup_.indices()) coset_of_[group_->mul(g, h)] = c;
  }
  const auto& gens = group_->generators();
  action_.reserve(gens.size());
  for (const auto& g : gens) action_.push_back(action_of(group_->require_index(g)));
}

Permutation CosetSpace::action_of(std::size_t element) const {
  std::vector<Point> images(size());
  for (std::size_t c = 0; c < size(); ++c) images[c] = static_cast<Point>(act(element, c));
  return Permutation(std::move(images));
}

CosetSpace left_coset_space(const GroupPtr& G, const Subgroup& H) {
  return CosetSpace(G, H);
}

Subgroup conjugate_subgroup(const Subgroup& H, std::size_t g) {
  const auto& G = H.parent();
  std::vector<std::size_t> idx;
  idx.reserve(H.order());
  for (std::size_t h : H.indices()) idx.push_back(G->conj(g, h));
  std::vector<std::size_t> gens;
  for (const auto& h : H.generators()) gens.push_back(G->conj(g, G->require_index(h)));
  Subgroup result = Subgroup::generated_by_indices(G, gens);
  std::sort(idx.begin(), idx.end());
  if (result.indices() != idx) fail(ErrorCode::kInternal, "conjugate generators disagree");
  return result;
}

Subgroup conjugate_subgroup(const Subgroup& H, const Permutation& g) {
  return conjugate_subgroup(H, H.parent()->require_index(g));
}

Subgroup intersect(const Subgroup& H, const Subgroup& K) {
  require_same_parent(H, K);
  std::vector<std::size_t> idx;
  for (std::size_t i : H.indices()) {
    if (K.contains_index(i)) idx.push_back(i);
  }
  return Subgroup::from_indices(H.parent(), std::move(idx));
}

Subgroup normal_core(const Subgroup& H) {
  const auto& G = H.parent();
  std::vector<bool> keep(G->order(), false);
  for (std::size_t h : H.indices()) keep[h] = true;
  // Conjugating by one representative per left coset of H suffices.
  CosetSpace cs(G, H);
  for (std::size_t g : cs.transversal()) {
    for (std::size_t h : H.indices()) {
      if (keep[h] && !H.contains_index(G->conj(G->inv(g), h))) keep[h] = false;
    }
  }
  std::vector<std::size_t> idx;
  for (std::size_t h : H.indices()) {
    if (keep[h]) idx.push_back(h);
  }
  return Subgroup::from_indices(G, std::move(idx));
}

bool is_normal(const Subgroup& H) {
  const auto& G = H.parent();
  for (const auto& g : G->generators()) {
    const std::size_t gi = G->require_index(g);
    for (std::size_t h : H.indices()) {
      if (!H.contains_index(G->conj(gi, h))) return false;
    }
  }
  return true;
}

std::size_t product_set_size(const Subgroup& H, const Subgroup& K) {
  require_same_parent(H, K);
  const auto& G = H.parent();
  std::vector<bool> hit(G->order(), false);
  std::size_t count = 0;
  for (std::size_t h : H.indices()) {
    for (std::size_t k : K.indices()) {
      const std::size_t x = G->mul(h, k);
      if (!hit[x]) {
        hit[x] = true;
        ++count;
      }
    }
  }
  return count;
}

std::vector<std::size_t> left_transversal(const Subgroup& big, const Subgroup& small) {
  require_same_parent(big, small);
  if (!small.is_subset_of(big)) fail(ErrorCode::kNotSubgroup, "subgroup is not contained in the larger one");
  const auto& G = big.parent();
  std::vector<bool> covered(G->order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t g : big.indices()) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (std::size_t h : small.indices()) covered[G->mul(g, h)] = true;
  }
  return reps;
}

Quotient quotient(const Subgroup& N) {
  if (!is_normal(N)) fail(ErrorCode::kNotNormal, "subgroup is not normal in its parent");
  const auto& G = N.parent();
  CosetSpace cs(G, N);
  Quotient q;
  q.group = PermGroup::closure(cs.size(), cs.action(), G->order());
  q.projection.resize(G->order());
  for (std::size_t g = 0; g < G->order(); ++g) {
    q.projection[g] = q.group->require_index(cs.action_of(g));
  }
  if (q.group->order() != cs.size()) fail(ErrorCode::kInternal, "quotient order differs from index");
  return q;
}

bool is_cyclic(const PermGroup& G) {
  for (const auto& g : G.elements()) {
    if (g.order() == G.order()) return true;
  }
  return false;
}

namespace {

struct GeneratorSearch {
  const GroupPtr& G;
  std::size_t target;
  std::size_t cap;
  std::size_t tested = 0;
  std::vector<std::size_t> tuple{};

  // Extends `tuple` to `target` elements, each strictly after the previous
  // one and outside the span of its predecessors.
  bool extend(std::size_t start, const Subgroup& span) {
    if (tuple.size() == target) {
      if (++tested > cap) {
        fail(ErrorCode::kCapExceeded, "generator search exceeded " + std::to_string(cap) + " tuples");
      }
      return span.is_whole();
    }
    for (std::size_t c = start; c < G->order(); ++c) {
      if (span.contains_index(c)) continue;
      tuple.push_back(c);
      if (extend(c + 1, Subgroup::generated_by_indices(G, tuple))) return true;
      tuple.pop_back();
    }
    return false;
  }
};

}  // namespace

MinGenerators min_generators(const GroupPtr& G, std::size_t search_cap) {
  MinGenerators out;
  if (G->order() == 1) return out;
  for (std::size_t r = 1;; ++r) {
    GeneratorSearch search{G, r, search_cap};
    if (search.extend(1, Subgroup::trivial(G))) {
      out.rank = r;
      for (std::size_t i : search.tuple) out.witness.push_back(G->element(i));
      return out;
    }
  }
}

bool generates_over_indices(const Subgroup& H, std::span<const std::size_t> tuple) {
  const auto& G = H.parent();
  std::vector<std::size_t> gens(tuple.begin(), tuple.end());
  for (const auto& h : H.generators()) gens.push_back(G->require_index(h));
  return Subgroup::generated_by_indices(G, gens).is_whole();
}

bool generates_over(const Subgroup& H, std::span<const Permutation> tuple) {
  std::vector<std::size_t> idx;
  for (const auto& g : tuple) idx.push_back(H.parent()->require_index(g));
  return generates_over_indices(H, idx);
}

std::vector<Subgroup> all_subgroups(const GroupPtr& G) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> found;
  std::vector<std::size_t> cyclic_gens;
  for (std::size_t g = 0; g < G->order(); ++g) {
    const std::size_t one[] = {g};
    Subgroup c = Subgroup::generated_by_indices(G, one);
    if (seen.insert(c.indices()).second) {
      found.push_back(c);
      cyclic_gens.push_back(g);
    }
  }
  // Every subgroup is a join of cyclic subgroups.
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t g : cyclic_gens) {
      if (found[head].contains_index(g)) continue;
      std::vector<std::size_t> gens;
      for (const auto& x : found[head].generators()) gens.push_back(G->require_index(x));
      gens.push_back(g);
      Subgroup joined = Subgroup::generated_by_indices(G, gens);
      if (seen.insert(joined.indices()).second) found.push_back(std::move(joined));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.indices() < b.indices();
  });
  return found;
}

}  // namespace edbound
