// Command-line front end: bound calculators, comparison tables and the
// verification suites.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edbound/bounds.hpp"
#include "edbound/catalog.hpp"
#include "edbound/documents.hpp"
#include "edbound/error.hpp"
#include "edbound/verify.hpp"

namespace {

using edbound::ErrorCode;
using edbound::Json;

struct Options {
  std::string instance;
  std::vector<std::string> gens;
  std::size_t max_s = 2;
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t s_max = 0;
  std::string suite;
  std::size_t max_order = 24;
  std::size_t cap = edbound::kDefaultOrderCap;
  std::string format = "table";
};

edbound::Instance read_instance(const Options& opt) {
  std::ifstream in(opt.instance);
  if (!in) edbound::fail(ErrorCode::kParse, "cannot open instance file " + opt.instance);
  std::stringstream buf;
  buf << in.rdbuf();
  return edbound::load_instance(edbound::parse_instance(buf.str()), opt.cap);
}

const edbound::Subgroup& require_n(const edbound::Instance& inst) {
  if (!inst.N) edbound::fail(ErrorCode::kValidation, "this command needs normal_N in the instance");
  return *inst.N;
}

std::string render_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : " ") + render_value(x);
    return out.empty() ? "-" : out;
  }
  return v.dump();
}

// Human view of a document: one "key  value" line per field.
void print_table(const Json& doc, const std::string& indent = "") {
  std::size_t width = 0;
  for (const auto& [key, _] : doc.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      std::cout << indent << key << ":\n";
      print_table(value, indent + "  ");
      continue;
    }
    std::cout << indent << key << std::string(width - key.size() + 2, ' ') << render_value(value)
              << '\n';
  }
}

void emit(const Json& doc, const Options& opt) {
  if (opt.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else {
    print_table(doc);
  }
}

int run_report(const edbound::BoundReport& report, const Options& opt) {
  emit(edbound::emit_report(report), opt);
  return 0;
}

int bound_thm_h(const Options& opt) {
  const auto inst = read_instance(opt);
  std::vector<edbound::Permutation> tuple;
  if (opt.gens.empty()) {
    tuple = inst.G->generators();
  } else {
    for (const auto& g : opt.gens) tuple.push_back(edbound::parse_cycles(g, inst.G->degree()));
  }
  return run_report(edbound::thm_h_bound(inst.G, inst.H, tuple), opt);
}

int bound_optimal(const Options& opt) {
  const auto inst = read_instance(opt);
  return run_report(edbound::optimal_thm_h_bound(inst.G, inst.H, opt.max_s), opt);
}

int bound_csa(const Options& opt) {
  const auto inst = read_instance(opt);
  const auto csa = edbound::csa_bound_details(inst.G, inst.H, require_n(inst));
  if (opt.format == "json") {
    Json doc;
    doc["csa_bound"] = csa.bound;
    doc["r"] = csa.r;
    doc["index"] = inst.H.index();
    doc["normal_index"] = require_n(inst).order() / inst.H.order();
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << csa.bound << '\n';
  }
  return 0;
}

int bound_section5(const Options& opt) {
  const auto inst = read_instance(opt);
  return run_report(edbound::section5_bound(inst.G, inst.H, require_n(inst)), opt);
}

int bound_pgl(const Options& opt) {
  const std::int64_t value = edbound::pgl_bound(opt.p, opt.s);
  if (opt.format == "json") {
    Json doc;
    doc["p"] = opt.p;
    doc["s"] = opt.s;
    doc["bound"] = value;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

int table_compare(const Options& opt) {
  if (opt.s_max < 2) edbound::fail(ErrorCode::kHypothesis, "--s-max must be at least 2");
  Json rows = Json::array();
  for (std::int64_t s = 2; s <= opt.s_max; ++s) rows.push_back(edbound::emit_comparison(edbound::compare_bounds(opt.p, s)));
  if (opt.format == "json") {
    std::cout << rows.dump(2) << '\n';
    return 0;
  }
  const char* cols[] = {"p", "s", "n", "odd_bound", "quadratic_bound", "earlier_bound", "new_bound", "prior_min", "minimum"};
  for (const char* c : cols) std::cout << c << (c == cols[8] ? "\n" : "\t");
  for (const auto& row : rows) {
    for (const char* c : cols) std::cout << (row[c].is_null() ? "-" : row[c].dump()) << (c == cols[8] ? "\n" : "\t");
  }
  return 0;
}

int verify(const Options& opt) {
  const auto result = edbound::run_suite(opt.suite, opt.max_order);
  if (opt.format == "json") {
    Json doc;
    doc["suite"] = result.name;
    doc["passed"] = result.passed();
    doc["instances"] = result.instances;
    doc["checks"] = result.checks;
    doc["failed"] = result.failed;
    doc["reports"] = result.reports;
    doc["rank_matches"] = result.rank_matches;
    doc["notes"] = result.notes;
    doc["failures"] = result.failures;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << (result.passed() ? "PASS " : "FAIL ") << result.name << ": " << result.instances
              << " instances, " << result.checks << " checks, " << result.failed << " failed";
    if (result.reports) {
      std::cout << ", " << result.rank_matches << "/" << result.reports << " reports with bound = rank(M)";
    }
    std::cout << '\n';
    for (const auto& f : result.failures) std::cout << "  " << f << '\n';
  }
  return result.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds on the essential dimension of G/H-crossed products"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance", opt.instance, "Instance file (JSON)")->required();
    cmd->add_option("--cap", opt.cap, "Largest group order to enumerate");
    add_format(cmd);
  };

  int (*handler)(const Options&) = nullptr;

  auto* bound = app.add_subcommand("bound", "Compute a bound");
  bound->require_subcommand(1);
  auto* thm_h = bound->add_subcommand("thm-h", "Stabilizer-sum bound for a generating tuple over H");
  add_instance(thm_h);
  thm_h->add_option("--gens", opt.gens, "Tuple elements in cycle notation (default: generators of G)");
  thm_h->callback([&] { handler = bound_thm_h; });

  auto* optimal = bound->add_subcommand("optimal", "Minimize the stabilizer-sum bound over tuples");
  add_instance(optimal);
  optimal->add_option("--max-s", opt.max_s, "Largest tuple size")->required();
  optimal->callback([&] { handler = bound_optimal; });

  auto* csa = bound->add_subcommand("csa", "r[G:H][N:H] - [G:H] + 1");
  add_instance(csa);
  csa->callback([&] { handler = bound_csa; });

  auto* sec5 = bound->add_subcommand("section5", "Representative optimization over G/N");
  add_instance(sec5);
  sec5->callback([&] { handler = bound_section5; });

  auto* pgl = bound->add_subcommand("pgl", "2n^2/p^2 - n + 1 for n = p^s");
  pgl->add_option("--p", opt.p, "Prime")->required();
  pgl->add_option("--s", opt.s, "Exponent, at least 2")->required();
  add_format(pgl);
  pgl->callback([&] { handler = bound_pgl; });

  auto* table = app.add_subcommand("table", "Comparison tables");
  table->require_subcommand(1);
  auto* compare = table->add_subcommand("compare", "Closed-form bounds for n = p^s, s = 2..s-max");
  compare->add_option("--p", opt.p, "Prime")->required();
  compare->add_option("--s-max", opt.s_max, "Largest exponent")->required();
  add_format(compare);
  compare->callback([&] { handler = table_compare; });

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites(std::begin(edbound::kSuiteNames), std::end(edbound::kSuiteNames));
  ver->add_option("--suite", opt.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  ver->add_option("--max-order", opt.max_order, "Largest catalog group order");
  add_format(ver);
  ver->callback([&] { handler = verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    return handler(opt);
  } catch (const edbound::Error& e) {
    std::cerr << "error [" << edbound::to_string(e.code()) << "]: " << e.what() << '\n';
    return edbound::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
