#include "edbound/documents.hpp"

#include "edbound/catalog.hpp"
#include "edbound/error.hpp"
#include "edbound/group_ops.hpp"

namespace edbound {

namespace {

std::vector<std::string> string_list(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    fail(ErrorCode::kParse, std::string("field \"") + key + "\" must be a list of cycle strings");
  }
  std::vector<std::string> out;
  for (const auto& item : doc[key]) {
    if (!item.is_string()) fail(ErrorCode::kParse, std::string("field \"") + key + "\" holds a non-string");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<Permutation> parse_all(const std::vector<std::string>& texts, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(parse_cycles(t, degree));
  return out;
}

Subgroup embed(const GroupPtr& G, const std::vector<Permutation>& gens, const char* name) {
  for (const auto& g : gens) {
    if (!G->contains(g)) {
      fail(ErrorCode::kValidation, std::string(name) + " generator " + g.to_cycles() + " is not in G");
    }
  }
  return Subgroup::generated(G, gens);
}

Json cycles_json(const std::vector<Permutation>& perms) {
  Json out = Json::array();
  for (const auto& p : perms) out.push_back(p.to_cycles());
  return out;
}

}  // namespace

InstanceDoc parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::kParse, "instance must be a JSON object");
  InstanceDoc out;
  if (!doc.contains("degree") || !doc["degree"].is_number_unsigned()) {
    fail(ErrorCode::kParse, "field \"degree\" must be a positive integer");
  }
  out.degree = doc["degree"].get<std::size_t>();
  out.group_gens = string_list(doc, "group");
  out.subgroup_H_gens = string_list(doc, "subgroup_H");
  if (doc.contains("normal_N")) out.normal_N_gens = string_list(doc, "normal_N");
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail(ErrorCode::kParse, "field \"label\" must be a string");
    out.label = doc["label"].get<std::string>();
  }
  return out;
}

std::string format_instance(const InstanceDoc& doc) {
  Json out;
  out["degree"] = doc.degree;
  out["group"] = doc.group_gens;
  out["subgroup_H"] = doc.subgroup_H_gens;
  if (doc.normal_N_gens) out["normal_N"] = *doc.normal_N_gens;
  if (!doc.label.empty()) out["label"] = doc.label;
  return out.dump(2) + "\n";
}

Instance load_instance(const InstanceDoc& doc, std::size_t cap) {
  if (doc.degree == 0) fail(ErrorCode::kValidation, "degree must be positive");
  GroupPtr G = PermGroup::closure(doc.degree, parse_all(doc.group_gens, doc.degree), cap);
  Subgroup H = embed(G, parse_all(doc.subgroup_H_gens, doc.degree), "H");
  std::optional<Subgroup> N;
  if (doc.normal_N_gens) {
    N = embed(G, parse_all(*doc.normal_N_gens, doc.degree), "N");
    if (!H.is_subset_of(*N)) fail(ErrorCode::kValidation, "H is not contained in N");
    if (!is_normal(*N)) fail(ErrorCode::kValidation, "N is not normal in G");
  }
  return Instance{std::move(G), std::move(H), std::move(N), doc.label};
}

Json emit_report(const BoundReport& r) {
  Json out;
  out["provenance"] = r.provenance;
  out["bound"] = r.bound;
  out["degree"] = r.degree;
  out["group_order"] = r.group_order;
  out["subgroup_order"] = r.subgroup_order;
  out["index"] = r.index;
  out["generating_tuple"] = cycles_json(r.generating_tuple);
  out["dropped"] = cycles_json(r.dropped);
  out["stabilizer_indices"] = r.stabilizer_indices;
  out["rank_M"] = r.rank_M;
  out["faithful"] = r.faithful;
  out["preconditions"] = {{"core_trivial", r.preconditions.core_trivial},
                          {"condition_ii", r.preconditions.condition_ii},
                          {"generates_over_H", r.preconditions.generates_over_h}};
  out["valid"] = r.valid();
  if (r.section5) {
    const auto& s = *r.section5;
    out["section5"] = {{"r", s.r},
                       {"quotient_degree", s.quotient_degree},
                       {"quotient_tuple", cycles_json(s.quotient_tuple)},
                       {"representatives", cycles_json(s.representatives)},
                       {"h_prime_order", s.h_prime_order},
                       {"m", s.m},
                       {"transversal", cycles_json(s.transversal)},
                       {"csa_bound", s.csa_bound},
                       {"maximality_verified", s.eq_n_verified},
                       {"generation_verified", s.generation_verified}};
  }
  out["note"] = r.note;
  return out;
}

std::string report_to_string(const BoundReport& report) { return emit_report(report).dump(2) + "\n"; }

BoundReport parse_report(const Json& doc) {
  try {
    BoundReport r;
    r.provenance = doc.at("provenance").get<std::string>();
    r.bound = doc.at("bound").get<std::int64_t>();
    r.degree = doc.at("degree").get<std::size_t>();
    r.group_order = doc.at("group_order").get<std::size_t>();
    r.subgroup_order = doc.at("subgroup_order").get<std::size_t>();
    r.index = doc.at("index").get<std::size_t>();
    r.generating_tuple = parse_all(string_list(doc, "generating_tuple"), r.degree);
    r.dropped = parse_all(string_list(doc, "dropped"), r.degree);
    r.stabilizer_indices = doc.at("stabilizer_indices").get<std::vector<std::size_t>>();
    r.rank_M = doc.at("rank_M").get<std::int64_t>();
    r.faithful = doc.at("faithful").get<bool>();
    const auto& pre = doc.at("preconditions");
    r.preconditions.core_trivial = pre.at("core_trivial").get<bool>();
    r.preconditions.condition_ii = pre.at("condition_ii").get<bool>();
    r.preconditions.generates_over_h = pre.at("generates_over_H").get<bool>();
    if (doc.contains("section5")) {
      const auto& s = doc["section5"];
      Section5Details d;
      d.r = s.at("r").get<std::size_t>();
      d.h_prime_order = s.at("h_prime_order").get<std::size_t>();
      d.m = s.at("m").get<std::size_t>();
      d.representatives = parse_all(string_list(s, "representatives"), r.degree);
      d.transversal = parse_all(string_list(s, "transversal"), r.degree);
      d.quotient_degree = s.at("quotient_degree").get<std::size_t>();
      d.quotient_tuple = parse_all(string_list(s, "quotient_tuple"), d.quotient_degree);
      d.csa_bound = s.at("csa_bound").get<std::int64_t>();
      d.eq_n_verified = s.at("maximality_verified").get<bool>();
      d.generation_verified = s.at("generation_verified").get<bool>();
      r.section5 = std::move(d);
    }
    r.note = doc.at("note").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("malformed report: ") + e.what());
  }
}

Json emit_comparison(const ComparisonRow& row) {
  Json out;
  out["p"] = row.p;
  out["s"] = row.s;
  out["n"] = row.n;
  out["odd_bound"] = row.odd_bound ? Json(*row.odd_bound) : Json(nullptr);
  out["quadratic_bound"] = row.quadratic_bound;
  out["earlier_bound"] = row.earlier_bound;
  out["new_bound"] = row.new_bound;
  out["prior_min"] = row.prior_min;
  out["minimum"] = row.minimum;
  return out;
}

}  // namespace edbound
