#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "prefrev/cli.hpp"
#include "prefrev/format.hpp"
#include "prefrev/oracle.hpp"
#include "prefrev/postulates.hpp"
#include "prefrev/revision.hpp"

namespace py = pybind11;
using namespace prefrev;

namespace {

Relation relation_from_pairs(std::size_t n, const std::vector<std::pair<Item, Item>>& pairs) {
  Relation r(n);
  for (const auto& [a, b] : pairs) {
    r.insert(a, b);
  }
  return r;
}

std::vector<std::pair<Item, Item>> relation_pairs(const Relation& r) {
  std::vector<std::pair<Item, Item>> out;
  for (const auto& c : r.pairs()) {
    out.emplace_back(c.better, c.worse);
  }
  return out;
}

PreferenceAssignment assignment_for(const Chain& chain, const py::object& spec) {
  if (py::isinstance<py::str>(spec)) {
    const auto name = spec.cast<std::string>();
    if (name == "trivial") return trivial_assignment(chain);
    if (name == "lex") return lex_assignment(chain);
    throw InvalidInput("unknown assignment keyword '" + name + "'");
  }
  return PreferenceAssignment(chain.comparison_count(),
                              spec.cast<std::vector<std::vector<std::size_t>>>());
}

py::dict suite_dict(const SuiteResult& r) {
  py::list failures;
  for (const auto& f : r.failures) {
    failures.append(f.describe());
  }
  py::dict d;
  d["suite"] = std::string(to_string(r.suite));
  d["n"] = r.space.n;
  d["full_chains_only"] = r.space.full_chains_only;
  d["samples"] = r.space.samples;
  d["seed"] = r.space.seed;
  d["instances"] = r.instances;
  d["checks"] = r.checks;
  d["failure_count"] = r.failure_count;
  d["failures"] = failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Revision of chain preferences by strict partial orders";

  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", invalid.ptr());

  py::class_<Relation>(m, "Relation")
      .def(py::init<std::size_t>(), py::arg("universe"))
      .def(py::init(&relation_from_pairs), py::arg("universe"), py::arg("pairs"),
           "Relation over items 0..universe-1 from (better, worse) index pairs.")
      .def_static("parse", [](const std::string& text, std::size_t n) { return parse_relation(text, n); },
                  py::arg("text"), py::arg("universe"), "Parse \"(3,1),(1,2)\" with 1-based items.")
      .def_property_readonly("universe", &Relation::universe)
      .def("pairs", &relation_pairs)
      .def("contains", py::overload_cast<Item, Item>(&Relation::contains, py::const_))
      .def("is_spo", [](const Relation& r) { return is_spo(r); })
      .def("closure", [](const Relation& r) { return transitive_closure(r); })
      .def("__len__", &Relation::size)
      .def("__eq__", [](const Relation& a, const Relation& b) { return a == b; })
      .def("__hash__", &Relation::hash)
      .def("__str__", [](const Relation& r) { return format_relation(r); })
      .def("__repr__", [](const Relation& r) { return "Relation(" + format_relation(r) + ")"; });

  py::class_<Chain>(m, "Chain")
      .def(py::init(&Chain::from_sequence), py::arg("universe"), py::arg("sequence"))
      .def_property_readonly("universe", &Chain::universe)
      .def_property_readonly("sequence", &Chain::sequence)
      .def_property_readonly("relation", &Chain::relation)
      .def("comparison_count", &Chain::comparison_count)
      .def("__str__", [](const Chain& c) { return format_chain(c); });

  m.def("union_plus", &union_plus);
  m.def("cycle_free_part", &cycle_free_part);
  m.def("cyclic_part", &cyclic_part);
  m.def("completions", [](const Chain& c, const Relation& s) { return completions(c, s); });
  m.def("decisive_completions",
        [](const Chain& c, const Relation& s) { return decisive_completions(c, s); });

  m.def("revise",
        [](const Chain& c, const Relation& s, const py::object& a) {
          return revise(c, s, assignment_for(c, a));
        },
        py::arg("chain"), py::arg("sigma"), py::arg("assignment") = "trivial",
        "assignment is \"trivial\", \"lex\" or a list of levels of comparison indices.");
  m.def("reference_revise", [](const Chain& c, const Relation& s, const py::object& a) {
    return greedy_oracle_revision(c, s, assignment_for(c, a));
  });

  m.def("check", [](const std::string& postulate, const Chain& c, const Relation& s1,
                    const py::object& a, std::optional<Relation> s2) {
    const auto op = induced_operator(assignment_for(c, a));
    PostulateReport r;
    if (postulate == "P1") r = check_p1(c, s1, op(c, s1));
    else if (postulate == "P2") r = check_p2(c, s1, op(c, s1));
    else if (postulate == "PD") r = check_pd(c, s1, op(c, s1));
    else if (postulate == "P3" || postulate == "P4") {
      if (!s2) throw InvalidInput(postulate + " needs a second preference");
      r = postulate == "P3" ? check_p3(c, s1, *s2, op) : check_p4(c, s1, *s2, op);
    } else {
      throw InvalidInput("unknown postulate '" + postulate + "'");
    }
    py::dict d;
    d["holds"] = r.holds;
    d["offending"] = r.witness ? py::cast(r.witness->offending) : py::none();
    return d;
  }, py::arg("postulate"), py::arg("chain"), py::arg("sigma"), py::arg("assignment") = "trivial",
     py::arg("sigma2") = py::none());

  m.def("is_coordinated", [](const Chain& c, const Relation& s1, const Relation& s2) {
    const auto r = is_coordinated(c, s1, s2);
    return py::make_tuple(r.coordinated, r.witness ? py::cast(r.witness->delta) : py::none());
  });

  m.def("run_suite", [](const std::string& suite, std::size_t n, std::size_t samples,
                        std::uint64_t seed, bool full_chains_only) {
    InstanceSpace space;
    space.n = n;
    space.samples = samples;
    space.seed = seed;
    space.full_chains_only = full_chains_only;
    return suite_dict(run_property_suite(space, parse_suite(suite)));
  }, py::arg("suite"), py::arg("n") = 3, py::arg("samples") = 0, py::arg("seed") = InstanceSpace{}.seed,
     py::arg("full_chains_only") = true);

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    const int code = run_command(args, out, err, in);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
