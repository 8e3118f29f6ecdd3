#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "edbound/bounds.hpp"
#include "edbound/perm_group.hpp"

namespace edbound {

using Json = nlohmann::ordered_json;

/// A (G, H, N) triple as written in an instance file.  Points are 1-based.
struct InstanceDoc {
  std::size_t degree = 0;
  std::vector<std::string> group_gens;
  std::vector<std::string> subgroup_H_gens;
  std::optional<std::vector<std::string>> normal_N_gens;
  std::string label;
};

struct Instance {
  GroupPtr G;
  Subgroup H;
  std::optional<Subgroup> N;
  std::string label;
};

/// kParse for malformed JSON or missing/mistyped fields.
InstanceDoc parse_instance(std::string_view text);
std::string format_instance(const InstanceDoc& doc);

/// Builds and validates the triple.  kParse for bad cycles; kValidation when
/// H is not in G, N is not in G, H is not in N, or N is not normal.
Instance load_instance(const InstanceDoc& doc, std::size_t cap = kDefaultOrderCap);

Json emit_report(const BoundReport& report);
/// Two-space indented with a trailing newline.
std::string report_to_string(const BoundReport& report);
/// Inverse of emit_report; needs the degree recorded in the document.
BoundReport parse_report(const Json& doc);

Json emit_comparison(const ComparisonRow& row);

}  // namespace edbound
