#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "edbound/perm_group.hpp"

namespace edbound {

/// Parses whitespace-separated disjoint cycles of 1-based points, e.g.
/// "(1 2 3)(4 5)".  "()" is the identity.  Errors are kParse.
Permutation parse_cycles(std::string_view text, std::size_t degree);

GroupPtr cyclic_group(std::size_t n);
/// Order 2n on n points, generated by (1 2 ... n) and the reflection fixing 1.
GroupPtr dihedral_group(std::size_t n);
GroupPtr symmetric_group(std::size_t n);
GroupPtr alternating_group(std::size_t n);
/// (Z/p)^k as k disjoint p-cycles on p*k points.
GroupPtr elementary_abelian_group(std::size_t p, std::size_t k);
/// A x B acting on disjoint point sets (A's points first).
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Constructor by name: "cyclic n", "dihedral n", "symmetric n",
/// "alternating n", "elementary_abelian p k".  A product is written
/// "direct_product(<kind>, <kind>)".  kValidation on an unknown kind.
GroupPtr make_group(std::string_view spec);

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

/// The test catalog restricted to groups of order at most `max_order`.
std::vector<NamedGroup> catalog(std::size_t max_order);

}  // namespace edbound
