#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "edbound/perm_group.hpp"

namespace edbound {

/// Left cosets gH of H in G with the induced action g * (xH) = (gx)H.
/// Coset 0 is H itself.
class CosetSpace {
 public:
  CosetSpace(GroupPtr group, Subgroup subgroup);

  const GroupPtr& group() const noexcept { return group_; }
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  std::size_t size() const noexcept { return transversal_.size(); }

  /// Parent indices of the coset representatives; entry 0 is the identity.
  const std::vector<std::size_t>& transversal() const noexcept { return transversal_; }
  const Permutation& representative(std::size_t coset) const {
    return group_->element(transversal_[coset]);
  }
  std::size_t coset_of(std::size_t element) const { return coset_of_[element]; }

  /// Coset reached from `coset` under the group element with index `element`.
  std::size_t act(std::size_t element, std::size_t coset) const {
    return coset_of_[group_->mul(element, transversal_[coset])];
  }
  /// The permutation of coset indices induced by a group element.
  Permutation action_of(std::size_t element) const;
  /// One coset permutation per generator of the group.
  const std::vector<Permutation>& action() const noexcept { return action_; }

 private:
  GroupPtr group_;
  Subgroup subgroup_;
  std::vector<std::size_t> transversal_;
  std::vector<std::size_t> coset_of_;
  std::vector<Permutation> action_;
};

/// Throws kNotSubgroup if H does not lie in G.
CosetSpace left_coset_space(const GroupPtr& G, const Subgroup& H);

/// H^g = g H g^-1.
Subgroup conjugate_subgroup(const Subgroup& H, const Permutation& g);
Subgroup conjugate_subgroup(const Subgroup& H, std::size_t g);

Subgroup intersect(const Subgroup& H, const Subgroup& K);

/// Intersection of all conjugates of H: the largest normal subgroup of the
/// parent contained in H.
Subgroup normal_core(const Subgroup& H);

bool is_normal(const Subgroup& H);

/// |{hk : h in H, k in K}| by explicit enumeration.
std::size_t product_set_size(const Subgroup& H, const Subgroup& K);

/// Representatives for the left cosets of `small` inside `big`, the
/// identity first, others in parent element order.
std::vector<std::size_t> left_transversal(const Subgroup& big, const Subgroup& small);

/// G/N realised by the action of G on the cosets of N.
struct Quotient {
  GroupPtr group;
  /// Parent element index -> index in `group`.
  std::vector<std::size_t> projection;
};

/// Throws kNotNormal unless N is normal in its parent.
Quotient quotient(const Subgroup& N);

struct MinGenerators {
  std::size_t rank = 0;
  std::vector<Permutation> witness;
};

inline constexpr std::size_t kDefaultSearchCap = 5'000'000;

/// Smallest r such that some r elements generate G, with the first witness
/// in increasing element order.  Throws kCapExceeded once more than
/// `search_cap` candidate tuples were tested.
MinGenerators min_generators(const GroupPtr& G, std::size_t search_cap = kDefaultSearchCap);

bool is_cyclic(const PermGroup& G);

/// True iff <tuple, H> is the whole parent group.  Throws kNotMember for a
/// tuple element outside the parent.
bool generates_over(const Subgroup& H, std::span<const Permutation> tuple);
bool generates_over_indices(const Subgroup& H, std::span<const std::size_t> tuple);

/// Every subgroup of G, sorted by (order, element indices).
std::vector<Subgroup> all_subgroups(const GroupPtr& G);

}  // namespace edbound
