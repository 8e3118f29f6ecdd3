#include "edbound/glattice.hpp"

#include <string>

#include "edbound/error.hpp"
#include "edbound/normal_forms.hpp"

namespace edbound {

GLattice::GLattice(GroupPtr group, std::vector<std::string> labels, std::vector<IntMatrix> action,
                   std::optional<IntMatrix> sublattice)
    : group_(std::move(group)),
      labels_(std::move(labels)),
      action_(std::move(action)),
      sublattice_(std::move(sublattice)) {
  if (action_.size() != group_->generators().size()) {
    fail(ErrorCode::kDegreeMismatch, "one action matrix is required per group generator");
  }
  for (const auto& m : action_) {
    if (m.rows() != rank() || m.cols() != rank()) {
      fail(ErrorCode::kDegreeMismatch, "action matrix does not match the lattice rank");
    }
  }
  if (sublattice_ && sublattice_->cols() != rank()) {
    fail(ErrorCode::kDegreeMismatch, "sublattice basis does not match the lattice rank");
  }
}

std::vector<IntMatrix> GLattice::element_matrices() const {
  std::vector<IntMatrix> out(group_->order());
  out[0] = IntMatrix::identity(rank());
  const auto& words = group_->words();
  for (std::size_t i = 1; i < words.size(); ++i) {
    const WordStep& w = words[i];
    out[w.element] = action_[w.generator] * out[w.prev];
  }
  return out;
}

IntVector GLattice::act(std::size_t generator, std::span<const Integer> v) const {
  return action_[generator] * v;
}

bool GLattice::is_homomorphism(bool exhaustive) const {
  const auto mats = element_matrices();
  const std::size_t n = group_->order();
  if (exhaustive) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (mats[a] * mats[b] != mats[group_->mul(a, b)]) return false;
      }
    }
    return true;
  }
  const auto& gens = group_->generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t s = group_->require_index(gens[k]);
    for (std::size_t h = 0; h < n; ++h) {
      if (action_[k] * mats[h] != mats[group_->mul(s, h)]) return false;
    }
  }
  return true;
}

bool GLattice::is_stable(const IntMatrix& basis) const {
  RowSpanSolver span(basis);
  for (std::size_t k = 0; k < action_.size(); ++k) {
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      if (!span.contains(act(k, basis.row(r)))) return false;
    }
  }
  return true;
}

GLattice perm_lattice(const CosetSpace& cs) {
  const std::size_t n = cs.size();
  std::vector<IntMatrix> action;
  for (const auto& p : cs.action()) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(p(static_cast<Point>(i)), i) = 1;
    action.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(cs.representative(i).to_cycles() + "H");
  return GLattice(cs.group(), std::move(labels), std::move(action));
}

GLattice omega_lattice(const CosetSpace& cs) {
  const std::size_t n = cs.size();
  const std::size_t r = n - 1;
  std::vector<IntMatrix> action;
  for (const auto& p : cs.action()) {
    // g(c_i - c_0) = (c_{g i} - c_0) - (c_{g 0} - c_0).
    IntMatrix m(r, r);
    const std::size_t moved_base = p(0);
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t image = p(static_cast<Point>(i));
      if (image != 0) m(image - 1, i - 1) += 1;
      if (moved_base != 0) m(moved_base - 1, i - 1) -= 1;
    }
    action.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < n; ++i) labels.push_back(cs.representative(i).to_cycles() + "H-H");
  return GLattice(cs.group(), std::move(labels), std::move(action));
}

IntVector coset_difference(const CosetSpace& cs, std::size_t element) {
  IntVector v(cs.size() - 1);
  const std::size_t c = cs.coset_of(element);
  if (c != 0) v[c - 1] = 1;
  return v;
}

namespace {

// Direct stabilizer of gH - H in Z[G/H], from the coset action alone.
std::vector<std::size_t> difference_stabilizer(const CosetSpace& cs, std::size_t g) {
  const std::size_t target = cs.coset_of(g);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < cs.group()->order(); ++x) {
    if (cs.act(x, target) == target && cs.act(x, 0) == 0) out.push_back(x);
  }
  return out;
}

}  // namespace

PhiData phi_matrix(const GroupPtr& G, const Subgroup& H, std::span<const Permutation> gens) {
  CosetSpace base = left_coset_space(G, H);
  const Subgroup& h = base.subgroup();
  if (!normal_core(h).is_trivial()) {
    fail(ErrorCode::kCoreNontrivial, "H contains a nontrivial normal subgroup of G");
  }
  std::vector<std::size_t> gidx;
  for (const auto& g : gens) {
    const std::size_t i = G->require_index(g);
    if (h.contains_index(i)) {
      fail(ErrorCode::kElementInH, "tuple element " + g.to_cycles() + " lies in H");
    }
    gidx.push_back(i);
  }

  GLattice omega = omega_lattice(base);
  const std::size_t omega_rank = omega.rank();

  std::vector<Subgroup> stabs;
  std::vector<CosetSpace> summands;
  for (std::size_t i = 0; i < gidx.size(); ++i) {
    Subgroup s = intersect(h, conjugate_subgroup(h, gidx[i]));
    if (s.indices() != difference_stabilizer(base, gidx[i])) {
      fail(ErrorCode::kInternal, "stabilizer of " + gens[i].to_cycles() +
                                     "H - H differs from H cap H^g");
    }
    summands.emplace_back(G, s);
    stabs.push_back(std::move(s));
  }

  std::size_t total = 0;
  for (const auto& cs : summands) total += cs.size();

  // Block-diagonal permutation action and the rows of phi.
  std::vector<IntMatrix> action(G->generators().size(), IntMatrix(total, total));
  std::vector<std::string> labels;
  IntMatrix phi(total, omega_rank);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const CosetSpace& cs = summands[i];
    for (std::size_t k = 0; k < cs.action().size(); ++k) {
      const Permutation& p = cs.action()[k];
      for (std::size_t j = 0; j < cs.size(); ++j) {
        action[k](offset + p(static_cast<Point>(j)), offset + j) = 1;
      }
    }
    for (std::size_t j = 0; j < cs.size(); ++j) {
      const std::size_t t = cs.transversal()[j];
      labels.push_back("S" + std::to_string(i + 1) + ":" + cs.representative(j).to_cycles());
      // t S_i  ->  t g_i H - t H.
      const std::size_t to = base.coset_of(G->mul(t, gidx[i]));
      const std::size_t from = base.coset_of(t);
      if (to != 0) phi(offset + j, to - 1) += 1;
      if (from != 0) phi(offset + j, from - 1) -= 1;
    }
    offset += cs.size();
  }
  GLattice P(G, std::move(labels), std::move(action));

  const IntMatrix phi_t = phi.transpose();
  for (std::size_t k = 0; k < P.action().size(); ++k) {
    if (phi_t * P.action()[k] != omega.action()[k] * phi_t) {
      fail(ErrorCode::kInternal, "phi is not G-equivariant");
    }
  }

  return PhiData{std::move(base), std::move(omega),
                 std::vector<Permutation>(gens.begin(), gens.end()),
                 std::move(stabs), std::move(summands), std::move(P), std::move(phi)};
}

KernelModule kernel_module(const GLattice& P, const IntMatrix& phi) {
  if (phi.rows() != P.rank()) fail(ErrorCode::kDegreeMismatch, "phi rows must match rank(P)");
  if (!lattice_equal(phi, IntMatrix::identity(phi.cols()))) {
    fail(ErrorCode::kNonSurjective,
         "phi is not onto omega(G/H): the tuple does not generate G over H");
  }
  IntMatrix k = kernel_basis(phi);
  RowSpanSolver span(k);
  std::vector<IntMatrix> induced;
  for (std::size_t s = 0; s < P.action().size(); ++s) {
    IntMatrix m(k.rows(), k.rows());
    for (std::size_t i = 0; i < k.rows(); ++i) {
      auto coords = span.solve(P.act(s, k.row(i)));
      if (!coords) fail(ErrorCode::kInternal, "kernel of phi is not G-stable over Z");
      for (std::size_t j = 0; j < k.rows(); ++j) m(j, i) = (*coords)[j];
    }
    induced.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k.rows(); ++i) labels.push_back("m" + std::to_string(i + 1));
  return KernelModule{GLattice(P.group(), std::move(labels), std::move(induced)), std::move(k)};
}

Subgroup action_kernel(const GLattice& L) {
  const auto mats = L.element_matrices();
  std::vector<std::size_t> idx;
  for (std::size_t g = 0; g < mats.size(); ++g) {
    if (mats[g].is_identity()) idx.push_back(g);
  }
  return Subgroup::from_indices(L.group(), std::move(idx));
}

IntMatrix zg_submodule(const GLattice& ambient, std::span<const IntVector> vectors) {
  IntMatrix current = row_basis(IntMatrix::from_rows(vectors, ambient.rank()));
  const std::size_t rounds = ambient.group()->order();
  for (std::size_t round = 0; round <= rounds; ++round) {
    IntMatrix grown = current;
    for (std::size_t k = 0; k < ambient.action().size(); ++k) {
      for (std::size_t r = 0; r < current.rows(); ++r) {
        grown.append_row(ambient.act(k, current.row(r)));
      }
    }
    IntMatrix next = row_basis(grown);
    if (next == current) return current;
    current = std::move(next);
  }
  fail(ErrorCode::kInternal, "orbit span did not stabilize within |G| rounds");
}

Subgroup g_v_subgroup(const CosetSpace& cs, const IntMatrix& V) {
  GLattice omega = omega_lattice(cs);
  if (V.cols() != omega.rank()) {
    fail(ErrorCode::kDegreeMismatch, "V must be given in omega(G/H) coordinates");
  }
  if (!omega.is_stable(V)) fail(ErrorCode::kNotStable, "V is not G-stable");
  RowSpanSolver span(V);
  std::vector<std::size_t> idx;
  for (std::size_t g = 0; g < cs.group()->order(); ++g) {
    if (span.contains(coset_difference(cs, g))) idx.push_back(g);
  }
  try {
    Subgroup out = Subgroup::from_indices(cs.group(), std::move(idx));
    if (!cs.subgroup().is_subset_of(out)) fail(ErrorCode::kInternal, "G_V does not contain H");
    return out;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotSubgroup) {
      fail(ErrorCode::kInternal, std::string("G_V is not a subgroup: ") + e.what());
    }
    throw;
  }
}

}  // namespace edbound
