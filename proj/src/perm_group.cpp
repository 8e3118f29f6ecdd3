#include "edbound/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "edbound/error.hpp"

namespace edbound {

namespace {

constexpr std::size_t kTableLimit = 256;

}  // namespace

GroupPtr PermGroup::closure(std::size_t degree, std::vector<Permutation> gens,
                            std::size_t cap) {
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      fail(ErrorCode::kDegreeMismatch, "generator " + g.to_cycles() + " has degree " +
                                           std::to_string(g.degree()) + ", expected " +
                                           std::to_string(degree));
    }
  }

  // Breadth-first orbit of the identity under left multiplication.
  std::vector<Permutation> found{Permutation::identity(degree)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{found[0], 0}};
  std::vector<WordStep> words{{0, 0, 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation next = gens[k] * found[head];
      if (seen.contains(next)) continue;
      if (found.size() >= cap) {
        fail(ErrorCode::kCapExceeded,
             "group order exceeds the cap of " + std::to_string(cap));
      }
      seen.emplace(next, found.size());
      words.push_back({found.size(), head, k});
      found.push_back(std::move(next));
    }
  }

  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  auto group = std::shared_ptr<PermGroup>(new PermGroup());
  group->degree_ = degree;
  group->generators_ = std::move(gens);
  group->elements_.reserve(found.size());
  for (std::size_t i : order) group->elements_.push_back(std::move(found[i]));
  for (std::size_t i = 0; i < group->elements_.size(); ++i) {
    group->lookup_.emplace(group->elements_[i], i);
  }
  for (auto& w : words) {
    w.element = rank[w.element];
    w.prev = rank[w.prev];
  }
  group->words_ = std::move(words);

  const std::size_t n = group->order();
  group->inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    group->inverse_[i] = group->lookup_.at(group->elements_[i].inverse());
  }
  if (n <= kTableLimit) {
    group->table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        group->table_[i * n + j] = static_cast<std::uint32_t>(
            group->lookup_.at(group->elements_[i] * group->elements_[j]));
      }
    }
  }
  return group;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::require_index(const Permutation& p) const {
  if (p.degree() != degree_) {
    fail(ErrorCode::kDegreeMismatch, "element " + p.to_cycles() + " has degree " +
                                         std::to_string(p.degree()) + ", group has " +
                                         std::to_string(degree_));
  }
  auto idx = index_of(p);
  if (!idx) fail(ErrorCode::kNotMember, "element " + p.to_cycles() + " is not in the group");
  return *idx;
}

std::size_t PermGroup::mul(std::size_t i, std::size_t j) const {
  if (!table_.empty()) return table_[i * order() + j];
  return lookup_.at(elements_[i] * elements_[j]);
}

// --- Subgroup ---------------------------------------------------------------

Subgroup Subgroup::generated(GroupPtr parent, std::span<const Permutation> gens) {
  std::vector<std::size_t> idx;
  idx.reserve(gens.size());
  for (const auto& g : gens) idx.push_back(parent->require_index(g));
  return generated_by_indices(std::move(parent), idx);
}

Subgroup Subgroup::generated_by_indices(GroupPtr parent, std::span<const std::size_t> gens) {
  Subgroup s;
  const std::size_t n = parent->order();
  s.mask_.assign(n, false);
  s.mask_[0] = true;
  std::vector<std::size_t> found{0};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t g : gens) {
      std::size_t next = parent->mul(g, found[head]);
      if (!s.mask_[next]) {
        s.mask_[next] = true;
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end());
  s.indices_ = std::move(found);
  for (std::size_t g : gens) s.generators_.push_back(parent->element(g));
  s.parent_ = std::move(parent);
  return s;
}

Subgroup Subgroup::whole(GroupPtr parent) {
  Subgroup s;
  s.mask_.assign(parent->order(), true);
  s.indices_.resize(parent->order());
  for (std::size_t i = 0; i < s.indices_.size(); ++i) s.indices_[i] = i;
  s.generators_ = parent->generators();
  s.parent_ = std::move(parent);
  return s;
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  Subgroup s;
  s.mask_.assign(parent->order(), false);
  s.mask_[0] = true;
  s.indices_ = {0};
  s.parent_ = std::move(parent);
  return s;
}

Subgroup Subgroup::from_indices(GroupPtr parent, std::vector<std::size_t> indices) {
  Subgroup s;
  const std::size_t n = parent->order();
  s.mask_.assign(n, false);
  for (std::size_t i : indices) {
    if (i >= n) fail(ErrorCode::kNotMember, "element index out of range");
    s.mask_[i] = true;
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty() || !s.mask_[0]) {
    fail(ErrorCode::kNotSubgroup, "element set does not contain the identity");
  }
  for (std::size_t a : indices) {
    for (std::size_t b : indices) {
      if (!s.mask_[parent->mul(a, b)]) {
        fail(ErrorCode::kNotSubgroup, "element set is not closed under products");
      }
    }
  }
  s.indices_ = std::move(indices);
  // Greedy generating set: add elements not yet reached.
  std::vector<bool> reached(n, false);
  reached[0] = true;
  std::vector<std::size_t> gens;
  for (std::size_t i : s.indices_) {
    if (reached[i]) continue;
    gens.push_back(i);
    Subgroup partial = generated_by_indices(parent, gens);
    for (std::size_t j : partial.indices_) reached[j] = true;
  }
  for (std::size_t g : gens) s.generators_.push_back(parent->element(g));
  s.parent_ = std::move(parent);
  return s;
}

std::vector<Permutation> Subgroup::elements() const {
  std::vector<Permutation> out;
  out.reserve(indices_.size());
  for (std::size_t i : indices_) out.push_back(parent_->element(i));
  return out;
}

bool Subgroup::contains(const Permutation& p) const {
  auto idx = parent_->index_of(p);
  return idx && mask_[*idx];
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  for (std::size_t i : indices_) {
    if (!other.contains(parent_->element(i))) return false;
  }
  return true;
}

GroupPtr Subgroup::as_group() const {
  return PermGroup::closure(parent_->degree(), generators_, parent_->order());
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  if (a.parent_ == b.parent_) return a.indices_ == b.indices_;
  return a.order() == b.order() && a.is_subset_of(b);
}

}  // namespace edbound
