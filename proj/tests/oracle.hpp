#pragma once

// Brute-force reference computations on plain permutation sets.  These do not
// touch PermGroup/Subgroup/CosetSpace so they can check them independently.

#include <set>
#include <vector>

#include "edbound/permutation.hpp"

namespace edbound::oracle {

using PermSet = std::set<Permutation>;

inline Permutation apply(const Permutation& p, const Permutation& q) {
  std::vector<Point> img(q.degree());
  for (std::size_t x = 0; x < q.degree(); ++x) img[x] = p.images()[q.images()[x]];
  return Permutation(img);
}

inline PermSet closure(std::size_t degree, const std::vector<Permutation>& gens) {
  PermSet out{Permutation::identity(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    PermSet snapshot = out;
    for (const auto& a : snapshot) {
      for (const auto& b : gens) {
        if (out.insert(apply(a, b)).second) grew = true;
      }
    }
  }
  return out;
}

inline PermSet conjugate(const PermSet& h, const Permutation& g) {
  PermSet out;
  for (const auto& x : h) out.insert(apply(apply(g, x), g.inverse()));
  return out;
}

inline PermSet intersection(const PermSet& a, const PermSet& b) {
  PermSet out;
  for (const auto& x : a) {
    if (b.contains(x)) out.insert(x);
  }
  return out;
}

inline PermSet product(const PermSet& a, const PermSet& b) {
  PermSet out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(apply(x, y));
  }
  return out;
}

/// [G : H cap H^g] for each g, summed, minus [G:H] plus 1.
inline long stabilizer_sum_bound(const PermSet& G, const PermSet& H, const std::vector<Permutation>& tuple) {
  long sum = 0;
  for (const auto& g : tuple) {
    if (H.contains(g)) continue;
    sum += static_cast<long>(G.size() / intersection(H, conjugate(H, g)).size());
  }
  return sum - static_cast<long>(G.size() / H.size()) + 1;
}

}  // namespace edbound::oracle
