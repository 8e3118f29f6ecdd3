#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "edbound/bounds.hpp"
#include "edbound/catalog.hpp"
#include "edbound/documents.hpp"
#include "edbound/error.hpp"

#ifndef EDBOUND_TEST_DATA_DIR
#error "EDBOUND_TEST_DATA_DIR must be defined"
#endif

namespace edbound {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an edbound::Error";
  return ErrorCode::kInternal;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

TEST(ParseCycles, AcceptedForms) {
  EXPECT_TRUE(parse_cycles("()", 4).is_identity());
  EXPECT_EQ(parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1,2)(3,4)", 4));
  EXPECT_EQ(parse_cycles(" (1 2 3) ", 3).to_cycles(), "(1 2 3)");
}

TEST(ParseCycles, RoundTrip) {
  const auto S5 = symmetric_group(5);
  for (const auto& g : S5->elements()) {
    EXPECT_EQ(parse_cycles(g.to_cycles(), 5), g);
  }
}

TEST(ParseCycles, Errors) {
  for (const char* bad : {"", "(1 2", "1 2)", "(1 1)", "(1 2)(2 3)", "(0 1)", "(1 9)", "(a b)"}) {
    EXPECT_EQ(code_of([&] { parse_cycles(bad, 4); }), ErrorCode::kParse) << bad;
  }
}

TEST(MakeGroup, Orders) {
  EXPECT_EQ(make_group("cyclic 4")->order(), 4u);
  EXPECT_EQ(make_group("dihedral 5")->order(), 10u);
  EXPECT_EQ(make_group("symmetric 4")->order(), 24u);
  EXPECT_EQ(make_group("alternating 4")->order(), 12u);
  EXPECT_EQ(make_group("elementary_abelian 3 2")->order(), 9u);
  const auto c6 = make_group("direct_product(cyclic 2, cyclic 3)");
  EXPECT_EQ(c6->order(), 6u);
  EXPECT_TRUE(is_cyclic(*c6));
  EXPECT_EQ(code_of([] { make_group("quaternion 8"); }), ErrorCode::kValidation);
}

TEST(Catalog, RespectsOrderBoundAndNames) {
  const auto groups = catalog(24);
  EXPECT_GE(groups.size(), 50u);
  for (const auto& [name, G] : groups) {
    EXPECT_LE(G->order(), 24u) << name;
    EXPECT_FALSE(name.empty());
  }
}

TEST(Instance, LoadsFixture) {
  const InstanceDoc doc = parse_instance(slurp(EDBOUND_TEST_DATA_DIR "/instances/d4.inst"));
  EXPECT_EQ(doc.degree, 4u);
  const Instance inst = load_instance(doc);
  EXPECT_EQ(inst.G->order(), 8u);
  EXPECT_EQ(inst.H.order(), 2u);
  ASSERT_TRUE(inst.N.has_value());
  EXPECT_EQ(inst.N->order(), 4u);
  EXPECT_EQ(parse_instance(format_instance(doc)).group_gens, doc.group_gens);
}

TEST(Instance, ParseErrors) {
  for (const char* bad : {"not json", "[]", R"j({"group": []})j", R"j({"degree": 3, "group": "(1 2)"})j",
                          R"j({"degree": 3, "group": [1], "subgroup_H": []})j",
                          R"j({"degree": -1, "group": [], "subgroup_H": []})j"}) {
    EXPECT_EQ(code_of([&] { parse_instance(bad); }), ErrorCode::kParse) << bad;
  }
}

TEST(Instance, ValidationErrors) {
  auto load = [](const char* text) { return load_instance(parse_instance(text)); };
  // H not in G.
  EXPECT_EQ(code_of([&] { load(R"j({"degree": 4, "group": ["(1 2 3 4)"], "subgroup_H": ["(1 2)"]})j"); }),
            ErrorCode::kValidation);
  // N not normal.
  EXPECT_EQ(code_of([&] {
              load(R"j({"degree": 4, "group": ["(1 2 3 4)", "(2 4)"], "subgroup_H": ["(2 4)"],
                       "normal_N": ["(2 4)"], "label": ""})j");
            }),
            ErrorCode::kValidation);
  // H not in N.
  EXPECT_EQ(code_of([&] {
              load(R"j({"degree": 4, "group": ["(1 2 3 4)", "(2 4)"], "subgroup_H": ["(2 4)"],
                       "normal_N": ["(1 2 3 4)"]})j");
            }),
            ErrorCode::kValidation);
  EXPECT_EQ(code_of([&] { load(R"j({"degree": 3, "group": ["(1 4)"], "subgroup_H": []})j"); }),
            ErrorCode::kParse);
}

TEST(Report, RoundTripsThroughJson) {
  const Instance inst = load_instance(parse_instance(slurp(EDBOUND_TEST_DATA_DIR "/instances/d4.inst")));
  const BoundReport r = section5_bound(inst.G, inst.H, *inst.N);
  const Json doc = emit_report(r);
  const BoundReport back = parse_report(Json::parse(report_to_string(r)));
  EXPECT_EQ(emit_report(back), doc);
  EXPECT_EQ(back.bound, 5);
  EXPECT_EQ(back.section5->csa_bound, 5);

  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  const std::vector<std::string> expected{"provenance",      "bound",        "degree",        "group_order",
                                          "subgroup_order",  "index",        "generating_tuple", "dropped",
                                          "stabilizer_indices", "rank_M",    "faithful",      "preconditions",
                                          "valid",           "section5",     "note"};
  EXPECT_EQ(keys, expected);
}

TEST(Report, MatchesGoldenFile) {
  const Instance inst = load_instance(parse_instance(slurp(EDBOUND_TEST_DATA_DIR "/instances/d4.inst")));
  const std::string got = report_to_string(section5_bound(inst.G, inst.H, *inst.N));
  EXPECT_EQ(got, slurp(EDBOUND_TEST_DATA_DIR "/golden/d4_section5.json"));
}

TEST(Report, ParseRejectsGarbage) {
  EXPECT_EQ(code_of([] { parse_report(Json::parse(R"j({"bound": 1})j")); }), ErrorCode::kParse);
}

}  // namespace
}  // namespace edbound
