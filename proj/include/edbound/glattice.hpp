#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edbound/group_ops.hpp"
#include "edbound/int_matrix.hpp"
#include "edbound/perm_group.hpp"

namespace edbound {

/// A Z-lattice of finite rank with a G-action.  `action()[k]` is the matrix
/// of the k-th group generator acting on column coordinate vectors, so
/// rho(gh) = rho(g) * rho(h).  Sublattices are given by basis rows.
class GLattice {
 public:
  GLattice(GroupPtr group, std::vector<std::string> labels, std::vector<IntMatrix> action,
           std::optional<IntMatrix> sublattice = std::nullopt);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<IntMatrix>& action() const noexcept { return action_; }
  const std::optional<IntMatrix>& sublattice() const noexcept { return sublattice_; }

  /// Matrix of every group element, indexed like the group's elements.
  std::vector<IntMatrix> element_matrices() const;

  /// rho(g) * v for the k-th generator g.
  IntVector act(std::size_t generator, std::span<const Integer> v) const;

  /// Checks rho(s h) = rho(s) rho(h) for every generator s and element h,
  /// which forces the full homomorphism law.  `exhaustive` instead tests
  /// every pair of elements.
  bool is_homomorphism(bool exhaustive = false) const;

  /// The row span of `basis` is carried into itself by every generator.
  bool is_stable(const IntMatrix& basis) const;

 private:
  GroupPtr group_;
  std::vector<std::string> labels_;
  std::vector<IntMatrix> action_;
  std::optional<IntMatrix> sublattice_;
};

/// Z[G/H] with 0/1 permutation matrices.
GLattice perm_lattice(const CosetSpace& cs);

/// omega(G/H) in the basis {coset_i - coset_0 : i >= 1}.
GLattice omega_lattice(const CosetSpace& cs);

/// Coordinates of (gH - H) in the omega basis; zero when g lies in H.
IntVector coset_difference(const CosetSpace& cs, std::size_t element);

/// The map P = sum_i Z[G/S_i] -> omega(G/H) sending the generator of the
/// i-th summand to (g_i H - H), together with its ingredients.
struct PhiData {
  CosetSpace base;                 // G/H
  GLattice omega;                  // omega(G/H)
  std::vector<Permutation> gens;   // g_1, ..., g_s
  std::vector<Subgroup> stabs;     // S_i = H cap H^{g_i}
  std::vector<CosetSpace> summands;  // G/S_i
  GLattice P;
  IntMatrix phi;                   // rank(P) x rank(omega), acts on rows
};

/// Requires a core-free H (kCoreNontrivial) and every g_i outside H
/// (kElementInH).  Verifies the stabilizer description of each S_i and the
/// equivariance of phi; a failure of either is kInternal.
PhiData phi_matrix(const GroupPtr& G, const Subgroup& H, std::span<const Permutation> gens);

struct KernelModule {
  GLattice lattice;    // M with its induced action
  IntMatrix embedding; // basis of M as rows in P-coordinates
};

/// M = ker(phi) with the induced action.  kNonSurjective when phi does not
/// reach all of omega(G/H).
KernelModule kernel_module(const GLattice& P, const IntMatrix& phi);

/// Elements acting as the identity matrix.  Trivial iff the action is faithful.
Subgroup action_kernel(const GLattice& L);

/// Hermite basis of the Z[G]-submodule generated by `vectors`.
IntMatrix zg_submodule(const GLattice& ambient, std::span<const IntVector> vectors);

/// G_V = {g : gH - H in V} for a G-stable V inside omega(G/H), given by rows in
/// the omega basis.  kNotStable for a V that is not G-stable.
Subgroup g_v_subgroup(const CosetSpace& cs, const IntMatrix& V);

}  // namespace edbound
