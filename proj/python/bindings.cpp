#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edbound/bounds.hpp"
#include "edbound/catalog.hpp"
#include "edbound/documents.hpp"
#include "edbound/error.hpp"
#include "edbound/group_ops.hpp"
#include "edbound/verify.hpp"

namespace py = pybind11;
using namespace edbound;

namespace {

// Groups are immutable and shared; Python holds one through this handle.
struct GroupHandle {
  GroupPtr G;
};

std::vector<Permutation> parse_many(const std::vector<std::string>& texts, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(parse_cycles(t, degree));
  return out;
}

Instance load(const std::string& text, std::size_t cap) { return load_instance(parse_instance(text), cap); }

const Subgroup& require_n(const Instance& inst) {
  if (!inst.N) fail(ErrorCode::kValidation, "instance has no normal_N");
  return *inst.N;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stabilizer-sum and related essential-dimension bounds for permutation groups";

  // Created once and kept alive by the module attribute.
  static PyObject* error_type =
      PyErr_NewException("edbound._core.EdboundError", PyExc_RuntimeError, nullptr);
  m.add_object("EdboundError", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("exit_code") = exit_code_for(e.code());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<GroupHandle>(m, "Group")
      .def_static(
          "from_generators",
          [](std::size_t degree, const std::vector<std::string>& gens, std::size_t cap) {
            return GroupHandle{PermGroup::closure(degree, parse_many(gens, degree), cap)};
          },
          py::arg("degree"), py::arg("generators"), py::arg("cap") = kDefaultOrderCap)
      .def_static("named", [](const std::string& spec) { return GroupHandle{make_group(spec)}; }, py::arg("spec"))
      .def_property_readonly("degree", [](const GroupHandle& h) { return h.G->degree(); })
      .def_property_readonly("order", [](const GroupHandle& h) { return h.G->order(); })
      .def("generators",
           [](const GroupHandle& h) {
             std::vector<std::string> out;
             for (const auto& g : h.G->generators()) out.push_back(g.to_cycles());
             return out;
           })
      .def("contains",
           [](const GroupHandle& h, const std::string& p) { return h.G->contains(parse_cycles(p, h.G->degree())); })
      .def("min_generators", [](const GroupHandle& h) { return min_generators(h.G).rank; })
      .def("is_cyclic", [](const GroupHandle& h) { return is_cyclic(*h.G); })
      .def("subgroup_orders", [](const GroupHandle& h) {
        std::vector<std::size_t> out;
        for (const auto& H : all_subgroups(h.G)) out.push_back(H.order());
        return out;
      });

  m.def("parse_cycles", [](const std::string& text, std::size_t degree) { return parse_cycles(text, degree).to_cycles(); },
        py::arg("text"), py::arg("degree"), "Normalizes cycle notation; raises on malformed input.");

  m.def("compose",
        [](const std::string& p, const std::string& q, std::size_t degree) {
          return (parse_cycles(p, degree) * parse_cycles(q, degree)).to_cycles();
        },
        py::arg("p"), py::arg("q"), py::arg("degree"), "p after q, as cycle notation.");

  m.def("stabilizer_index",
        [](const std::string& instance, const std::string& g) {
          const Instance inst = load(instance, kDefaultOrderCap);
          const StabilizerIndex s = stabilizer_index(inst.H, parse_cycles(g, inst.G->degree()));
          return py::make_tuple(s.index, s.product_size, s.identity_check);
        },
        py::arg("instance"), py::arg("g"));

  m.def("thm_h_bound",
        [](const std::string& instance, std::optional<std::vector<std::string>> gens, std::size_t cap) {
          const Instance inst = load(instance, cap);
          const auto tuple = gens ? parse_many(*gens, inst.G->degree()) : inst.G->generators();
          return report_to_string(thm_h_bound(inst.G, inst.H, tuple));
        },
        py::arg("instance"), py::arg("gens") = py::none(), py::arg("cap") = kDefaultOrderCap,
        "Report document (JSON text) for the given tuple, defaulting to G's generators.");

  m.def("optimal_thm_h_bound",
        [](const std::string& instance, std::size_t max_s, std::size_t cap) {
          const Instance inst = load(instance, cap);
          return report_to_string(optimal_thm_h_bound(inst.G, inst.H, max_s));
        },
        py::arg("instance"), py::arg("max_s"), py::arg("cap") = kDefaultOrderCap);

  m.def("csa_bound",
        [](const std::string& instance, std::size_t cap) {
          const Instance inst = load(instance, cap);
          return csa_bound(inst.G, inst.H, require_n(inst));
        },
        py::arg("instance"), py::arg("cap") = kDefaultOrderCap);

  m.def("section5_bound",
        [](const std::string& instance, std::size_t cap) {
          const Instance inst = load(instance, cap);
          return report_to_string(section5_bound(inst.G, inst.H, require_n(inst)));
        },
        py::arg("instance"), py::arg("cap") = kDefaultOrderCap);

  m.def("normalize_report",
        [](const std::string& report) { return report_to_string(parse_report(Json::parse(report))); },
        py::arg("report"), "Parses a report document and re-emits it.");

  m.def("pgl_bound", &pgl_bound, py::arg("p"), py::arg("s"));
  m.def("compare_bounds", [](std::int64_t p, std::int64_t s) { return emit_comparison(compare_bounds(p, s)).dump(); },
        py::arg("p"), py::arg("s"));

  m.def("run_suite",
        [](const std::string& name, std::size_t max_order) {
          SuiteResult r;
          {
            py::gil_scoped_release release;
            r = run_suite(name, max_order);
          }
          py::dict out;
          out["name"] = r.name;
          out["instances"] = r.instances;
          out["checks"] = r.checks;
          out["failed"] = r.failed;
          out["failures"] = r.failures;
          out["reports"] = r.reports;
          out["rank_matches"] = r.rank_matches;
          out["notes"] = r.notes;
          out["seconds"] = r.seconds;
          out["passed"] = r.passed();
          return out;
        },
        py::arg("name"), py::arg("max_order") = 24);

  m.attr("RANK_NOTE") = std::string(kRankNote);
}
