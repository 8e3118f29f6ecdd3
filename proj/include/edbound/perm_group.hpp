#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "edbound/permutation.hpp"

namespace edbound {

inline constexpr std::size_t kDefaultOrderCap = 20000;

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// One step of a breadth-first word for an element: element = gen * prev.
/// The identity (index 0) has no predecessor.
struct WordStep {
  std::size_t element;
  std::size_t prev;
  std::size_t generator;
};

/// A finite permutation group stored fully enumerated.  Elements are sorted
/// lexicographically by image array, so the identity always has index 0.
/// Immutable once built.
class PermGroup {
 public:
  /// The group generated by `gens` on `degree` points.  Throws
  /// kCapExceeded once the order would pass `cap`.
  static GroupPtr closure(std::size_t degree, std::vector<Permutation> gens,
                          std::size_t cap = kDefaultOrderCap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }
  /// Throws kNotMember when `p` is outside the group.
  std::size_t require_index(const Permutation& p) const;

  /// Index of element(i) * element(j).
  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const { return inverse_[i]; }
  /// Index of element(g) * element(h) * element(g)^-1.
  std::size_t conj(std::size_t g, std::size_t h) const { return mul(mul(g, h), inv(g)); }

  /// Breadth-first spanning tree over the generators, in visiting order.
  const std::vector<WordStep>& words() const noexcept { return words_; }

 private:
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> lookup_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint32_t> table_;  // Cayley table, small groups only
  std::vector<WordStep> words_;
};

/// A subgroup of a fixed parent group, stored as a membership mask over the
/// parent's element indices.
class Subgroup {
 public:
  /// Closure of `gens` inside `parent`.  Throws kNotMember for a generator
  /// outside the parent.
  static Subgroup generated(GroupPtr parent, std::span<const Permutation> gens);
  static Subgroup generated_by_indices(GroupPtr parent, std::span<const std::size_t> gens);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  /// Builds from an explicit element set.  Throws kNotSubgroup unless the set
  /// contains the identity and is closed under products.
  static Subgroup from_indices(GroupPtr parent, std::vector<std::size_t> indices);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Sorted parent indices.
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::vector<Permutation> elements() const;
  std::size_t order() const noexcept { return indices_.size(); }
  /// [parent : this].
  std::size_t index() const noexcept { return parent_->order() / order(); }

  bool contains_index(std::size_t i) const { return mask_[i]; }
  bool contains(const Permutation& p) const;
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == parent_->order(); }
  bool is_subset_of(const Subgroup& other) const;

  /// The subgroup as a standalone group on the parent's points.
  GroupPtr as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup() = default;

  GroupPtr parent_;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> indices_;
  std::vector<bool> mask_;
};

}  // namespace edbound
