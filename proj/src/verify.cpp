#include "edbound/verify.hpp"

#include <gmpxx.h>

#include <chrono>
#include <random>

#include "edbound/bounds.hpp"
#include "edbound/catalog.hpp"
#include "edbound/error.hpp"
#include "edbound/glattice.hpp"
#include "edbound/group_ops.hpp"
#include "edbound/normal_forms.hpp"

namespace edbound {

namespace {

constexpr std::size_t kMaxFailureMessages = 20;

class Timer {
 public:
  explicit Timer(SuiteResult& r) : result_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SuiteResult& result_;
  std::chrono::steady_clock::time_point start_;
};

std::string describe(const std::string& group, const Subgroup& H) {
  std::string gens;
  for (const auto& g : H.generators()) gens += (gens.empty() ? "" : ",") + g.to_cycles();
  return group + " H=<" + gens + ">";
}

std::string tuple_text(const std::vector<Permutation>& tuple) {
  std::string out = "{";
  for (const auto& g : tuple) out += (out.size() > 1 ? "," : "") + g.to_cycles();
  return out + "}";
}

// Rank over Q by plain Gaussian elimination on rationals.
std::size_t rational_rank(const IntMatrix& a) {
  std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = mpq_class(a(r, c));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < a.cols(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool is_hermite(const HermiteForm& f) {
  const IntMatrix& h = f.H;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (i >= f.rank()) {
      for (std::size_t c = 0; c < h.cols(); ++c) {
        if (h(i, c) != 0) return false;
      }
      continue;
    }
    const std::size_t p = f.pivot_cols[i];
    if (i > 0 && p <= f.pivot_cols[i - 1]) return false;
    if (h(i, p) <= 0) return false;
    for (std::size_t c = 0; c < p; ++c) {
      if (h(i, c) != 0) return false;
    }
    for (std::size_t r = 0; r < i; ++r) {
      if (h(r, p) < 0 || h(r, p) >= h(i, p)) return false;
    }
  }
  return true;
}

bool is_smith(const SmithForm& f) {
  const IntMatrix& s = f.S;
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) {
      if (r != c && s(r, c) != 0) return false;
    }
  }
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) {
    const bool nonzero = i < f.rank;
    if (nonzero != (s(i, i) != 0) || s(i, i) < 0) return false;
    if (i + 1 < f.rank && s(i + 1, i + 1) % s(i, i) != 0) return false;
  }
  return true;
}

bool unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

}  // namespace

void SuiteResult::check(bool ok, const std::function<std::string()>& what) {
  ++checks;
  if (ok) return;
  ++failed;
  if (failures.size() < kMaxFailureMessages) failures.push_back(what());
}

SuiteResult verify_group(std::size_t max_order) {
  SuiteResult res{"group"};
  Timer timer(res);
  for (const auto& [name, G] : catalog(max_order)) {
    ++res.instances;
    const auto subs = all_subgroups(G);
    for (const auto& H : subs) {
      res.check(G->order() % H.order() == 0 && H.index() * H.order() == G->order(),
                [&] { return "Lagrange fails for " + describe(name, H); });
    }
    for (const auto& H : subs) {
      for (const auto& K : subs) {
        res.check(product_set_size(H, K) * intersect(H, K).order() == H.order() * K.order(),
                  [&] { return "product formula fails in " + name; });
      }
    }
    if (G->order() > 24) continue;
    std::vector<const Subgroup*> normals;
    for (const auto& H : subs) {
      if (is_normal(H)) normals.push_back(&H);
    }
    for (const auto& H : subs) {
      const Subgroup core = normal_core(H);
      res.check(is_normal(core) && core.is_subset_of(H),
                [&] { return "core is not a normal subgroup of H for " + describe(name, H); });
      for (const Subgroup* n : normals) {
        if (n->is_subset_of(H)) {
          res.check(n->is_subset_of(core),
                    [&] { return "core misses a normal subgroup for " + describe(name, H); });
        }
      }
      CosetSpace cs(G, H);
      std::vector<std::size_t> kernel;
      for (std::size_t g = 0; g < G->order(); ++g) {
        if (cs.action_of(g).is_identity()) kernel.push_back(g);
      }
      res.check(kernel == core.indices(),
                [&] { return "coset-action kernel differs from the core for " + describe(name, H); });
      for (std::size_t g = 0; g < G->order(); ++g) {
        const Subgroup base = conjugate_subgroup(H, g);
        for (std::size_t h : H.indices()) {
          res.check(conjugate_subgroup(H, G->mul(g, h)) == base,
                    [&] { return "H^{gh} != H^g for " + describe(name, H); });
        }
      }
      if (is_normal(H)) {
        res.check(quotient(H).group->order() * H.order() == G->order(),
                  [&] { return "quotient order wrong for " + describe(name, H); });
      }
    }
  }
  return res;
}

SuiteResult verify_lattice(std::size_t samples, std::uint64_t seed) {
  SuiteResult res{"lattice"};
  Timer timer(res);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  std::uniform_int_distribution<long> entry(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<int> coin(0, 3);
  for (std::size_t t = 0; t < samples; ++t) {
    ++res.instances;
    const std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      // Some rows are small combinations of earlier ones, forcing deficiency.
      if (r >= 2 && coin(rng) == 0) {
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = small(rng) * a(0, c) + small(rng) * a(r - 1, c);
      } else {
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = entry(rng);
      }
    }
    const std::string tag = "sample " + std::to_string(t);

    const HermiteForm hf = hermite_normal_form(a);
    res.check(hf.U * a == hf.H, [&] { return tag + ": U*A != H"; });
    res.check(unimodular(hf.U), [&] { return tag + ": HNF transform not unimodular"; });
    res.check(is_hermite(hf), [&] { return tag + ": H not in Hermite form"; });

    const SmithForm sf = smith_normal_form(a);
    res.check(sf.U * a * sf.V == sf.S, [&] { return tag + ": U*A*V != S"; });
    res.check(unimodular(sf.U) && unimodular(sf.V), [&] { return tag + ": SNF transforms not unimodular"; });
    res.check(is_smith(sf), [&] { return tag + ": S not in Smith form"; });

    const std::size_t q = rational_rank(a);
    res.check(hf.rank() == q && sf.rank == q, [&] { return tag + ": ranks disagree"; });

    const IntMatrix k = kernel_basis(a);
    res.check(k.rows() + q == rows, [&] { return tag + ": kernel rank wrong"; });
    res.check((k * a).is_zero(), [&] { return tag + ": kernel row does not annihilate A"; });
    if (k.rows() > 0) {
      const SmithForm ks = smith_normal_form(k);
      bool saturated = ks.rank == k.rows();
      for (const auto& d : ks.elementary_divisors()) saturated = saturated && d == 1;
      res.check(saturated, [&] { return tag + ": kernel not saturated"; });
    }
  }
  return res;
}

SuiteResult verify_lemma32(std::size_t max_order) {
  SuiteResult res{"lemma32"};
  Timer timer(res);
  for (const auto& [name, G] : catalog(max_order)) {
    if (G->order() == 1) continue;
    const bool cyclic = is_cyclic(*G);
    for (const auto& H : all_subgroups(G)) {
      if (!normal_core(H).is_trivial()) continue;
      CosetSpace cs(G, H);
      std::vector<std::vector<Permutation>> tuples;
      for (std::size_t a = 1; a < cs.size(); ++a) {
        tuples.push_back({cs.representative(a)});
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
          tuples.push_back({cs.representative(a), cs.representative(b)});
        }
      }
      for (const auto& tuple : tuples) {
        ++res.instances;
        const auto where = [&] { return describe(name, H) + " tuple " + tuple_text(tuple); };
        PhiData data = phi_matrix(G, H, tuple);
        if (!generates_over(H, tuple)) {
          bool rejected = false;
          try {
            kernel_module(data.P, data.phi);
          } catch (const Error& e) {
            rejected = e.code() == ErrorCode::kNonSurjective;
          }
          res.check(rejected, [&] { return where() + ": non-generating tuple not rejected"; });
          continue;
        }
        KernelModule M = kernel_module(data.P, data.phi);
        const Subgroup kernel = action_kernel(M.lattice);
        const bool single_full = tuple.size() == 1 && data.stabs[0] == H;
        if (single_full) {
          res.check(kernel.is_whole() && M.lattice.rank() == 1,
                    [&] { return where() + ": expected trivial action on M = Z"; });
        } else {
          res.check(kernel.is_trivial(), [&] { return where() + ": expected a faithful action"; });
        }
        res.check((M.embedding * data.phi).is_zero() &&
                      M.lattice.rank() + data.omega.rank() == data.P.rank(),
                  [&] { return where() + ": sequence is not exact"; });
        res.check(M.lattice.is_homomorphism(), [&] { return where() + ": induced action is not a homomorphism"; });

        if (cyclic && H.is_trivial()) continue;
        BoundReport report = thm_h_bound(G, H, tuple);
        ++res.reports;
        if (report.valid() && report.bound == report.rank_M &&
            report.rank_M == static_cast<std::int64_t>(M.lattice.rank())) {
          ++res.rank_matches;
        }
        if (report.note == kRankNote) ++res.notes;
        res.check(report.valid() && report.bound == static_cast<std::int64_t>(M.lattice.rank()),
                  [&] { return where() + ": bound differs from rank(M)"; });
      }
    }
  }
  return res;
}

SuiteResult verify_lemma43(std::size_t max_order, std::size_t random_samples, std::uint64_t seed) {
  SuiteResult res{"lemma43"};
  Timer timer(res);
  const auto groups = catalog(max_order);

  auto check_gv = [&](const std::string& where, const CosetSpace& cs, const IntMatrix& V,
                      const Subgroup* must_contain) {
    ++res.instances;
    try {
      const Subgroup gv = g_v_subgroup(cs, V);
      res.check(cs.subgroup().is_subset_of(gv), [&] { return where + ": G_V misses H"; });
      if (must_contain) {
        res.check(must_contain->is_subset_of(gv), [&] { return where + ": G_V misses <H, g>"; });
      }
    } catch (const Error& e) {
      res.check(false, [&] { return where + ": " + e.what(); });
    }
  };

  for (const auto& [name, G] : groups) {
    for (const auto& H : all_subgroups(G)) {
      CosetSpace cs(G, H);
      GLattice omega = omega_lattice(cs);
      const auto where = describe(name, H);
      // Extremes: V = 0 gives H, V = omega gives G.
      res.check(g_v_subgroup(cs, IntMatrix(0, omega.rank())) == H,
                [&] { return where + ": G_0 != H"; });
      res.check(g_v_subgroup(cs, IntMatrix::identity(omega.rank())).is_whole(),
                [&] { return where + ": G_omega != G"; });
      for (std::size_t c = 1; c < cs.size(); ++c) {
        const std::size_t g = cs.transversal()[c];
        const IntMatrix V = zg_submodule(omega, std::vector<IntVector>{coset_difference(cs, g)});
        std::vector<std::size_t> gens{g};
        for (const auto& h : H.generators()) gens.push_back(G->require_index(h));
        const Subgroup joined = Subgroup::generated_by_indices(G, gens);
        check_gv(where + " orbit of " + G->element(g).to_cycles(), cs, V, &joined);
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::size_t produced = 0;
  while (produced < random_samples) {
    const auto& [name, G] = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
    const auto subs = all_subgroups(G);
    const Subgroup& H = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
    CosetSpace cs(G, H);
    GLattice omega = omega_lattice(cs);
    if (omega.rank() == 0) continue;
    std::vector<IntVector> vectors(std::uniform_int_distribution<std::size_t>(1, 2)(rng),
                                   IntVector(omega.rank()));
    for (auto& v : vectors) {
      for (auto& x : v) x = entry(rng);
    }
    const IntMatrix V = zg_submodule(omega, vectors);
    check_gv(describe(name, H) + " random V", cs, V, nullptr);
    ++produced;
  }
  return res;
}

SuiteResult verify_generation(std::size_t max_order) {
  SuiteResult res{"generation"};
  Timer timer(res);
  for (const auto& [name, G] : catalog(max_order)) {
    for (const auto& H : all_subgroups(G)) {
      CosetSpace cs(G, H);
      GLattice omega = omega_lattice(cs);
      const IntMatrix full = IntMatrix::identity(omega.rank());
      std::vector<std::vector<std::size_t>> tuples{{}};
      for (std::size_t a = 0; a < cs.size(); ++a) {
        tuples.push_back({a});
        for (std::size_t b = a + 1; b < cs.size(); ++b) tuples.push_back({a, b});
      }
      for (const auto& cosets : tuples) {
        ++res.instances;
        std::vector<std::size_t> elems;
        std::vector<IntVector> diffs;
        for (std::size_t c : cosets) {
          elems.push_back(cs.transversal()[c]);
          diffs.push_back(coset_difference(cs, cs.transversal()[c]));
        }
        const bool spans = lattice_equal(zg_submodule(omega, diffs), full);
        const bool generates = generates_over_indices(H, elems);
        res.check(spans == generates, [&] {
          std::vector<Permutation> t;
          for (std::size_t e : elems) t.push_back(G->element(e));
          return describe(name, H) + " tuple " + tuple_text(t) + ": span " +
                 (spans ? "is" : "is not") + " omega but generation says " +
                 (generates ? "yes" : "no");
        });
      }
    }
  }
  return res;
}

SuiteResult verify_remark42(std::size_t max_order) {
  SuiteResult res{"remark42"};
  Timer timer(res);
  for (const auto& [name, G] : catalog(max_order)) {
    for (const auto& H : all_subgroups(G)) {
      for (std::size_t g = 0; g < G->order(); ++g) {
        ++res.instances;
        const StabilizerIndex s = stabilizer_index(H, g);
        const Subgroup conj = conjugate_subgroup(H, g);
        const std::size_t direct = G->order() / intersect(H, conj).order();
        res.check(s.identity_check && s.index == direct &&
                      s.product_size % H.order() == 0 &&
                      direct == H.index() * (s.product_size / H.order()),
                  [&] { return describe(name, H) + " g=" + G->element(g).to_cycles(); });
      }
    }
  }
  return res;
}

SuiteResult verify_section5(std::size_t max_order) {
  SuiteResult res{"section5"};
  Timer timer(res);

  auto record = [&](const std::string& where, const BoundReport& r) {
    ++res.reports;
    if (r.valid() && r.bound == r.rank_M) ++res.rank_matches;
    if (r.note == kRankNote) ++res.notes;
    res.check(r.section5.has_value() && r.section5->eq_n_verified && r.section5->generation_verified,
              [&] { return where + ": construction checks missing"; });
    res.check(r.section5 && r.bound <= r.section5->csa_bound,
              [&] { return where + ": bound exceeds the crossed-product bound"; });
    res.check(r.valid() && r.bound == r.rank_M, [&] { return where + ": bound differs from rank(M)"; });
  };

  // Fixed instances.
  {
    ++res.instances;
    GroupPtr d4 = dihedral_group(4);
    const Permutation refl = parse_cycles("(2 4)", 4);
    const Subgroup H = Subgroup::generated(d4, std::vector{refl});
    const Subgroup N = Subgroup::generated(d4, std::vector{refl, parse_cycles("(1 3)", 4)});
    const BoundReport r = section5_bound(d4, H, N);
    record("D4", r);
    res.check(r.bound == 5 && r.section5->csa_bound == 5 && r.section5->m == 1 &&
                  r.section5->h_prime_order == 4,
              [&] { return "D4 instance: expected bound 5 = csa bound with H' = N"; });
  }
  {
    ++res.instances;
    GroupPtr v4 = elementary_abelian_group(2, 2);
    const Subgroup one = Subgroup::trivial(v4);
    const BoundReport r = section5_bound(v4, one, one);
    record("V4", r);
    res.check(r.bound == 5 && r.section5->csa_bound == 5, [&] { return "V4 instance: expected 5"; });
  }

  for (const auto& [name, G] : catalog(max_order)) {
    const auto subs = all_subgroups(G);
    std::vector<const Subgroup*> normals;
    for (const auto& N : subs) {
      if (is_normal(N)) normals.push_back(&N);
    }
    for (const auto& H : subs) {
      if (!normal_core(H).is_trivial()) continue;
      for (const Subgroup* N : normals) {
        if (!H.is_subset_of(*N)) continue;
        std::string where = describe(name, H) + " N order " + std::to_string(N->order());
        try {
          csa_bound(G, H, *N);
        } catch (const Error& e) {
          res.check(e.code() == ErrorCode::kHypothesis && H.is_trivial(),
                    [&] { return where + ": unexpected rejection " + e.what(); });
          continue;
        }
        ++res.instances;
        try {
          record(where, section5_bound(G, H, *N));
        } catch (const Error& e) {
          res.check(false, [&] { return where + ": " + e.what(); });
        }
      }
    }
  }
  return res;
}

SuiteResult run_suite(std::string_view name, std::size_t max_order) {
  if (name == "group") return verify_group(max_order);
  if (name == "lattice") return verify_lattice(500, 20240611);
  if (name == "lemma32") return verify_lemma32(max_order);
  if (name == "lemma43") return verify_lemma43(max_order, 200, 7);
  if (name == "remark42") return verify_remark42(max_order);
  if (name == "section5") return verify_section5(max_order);
  if (name == "generation") return verify_generation(max_order);
  fail(ErrorCode::kValidation, "unknown suite: " + std::string(name));
}

}  // namespace edbound
