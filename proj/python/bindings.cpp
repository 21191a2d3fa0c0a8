// Copyright 2026 The ffactor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffactor/errors.hpp"
#include "ffactor/io.hpp"
#include "ffactor/obstruction.hpp"
#include "ffactor/properties.hpp"
#include "ffactor/stream.hpp"
#include "ffactor/suite.hpp"
#include "ffactor/trails.hpp"

namespace py = pybind11;
using namespace ffactor;

namespace {

using NamedEdge = std::pair<std::string, std::string>;

std::vector<NamedEdge> named(const FactorProblem& p, const Factor& f) {
  std::vector<NamedEdge> out;
  for (const Edge& e : f) out.emplace_back(p.graph().name(e.u), p.graph().name(e.v));
  return out;
}

Factor unnamed(const FactorProblem& p, const std::vector<NamedEdge>& edges) {
  Factor f;
  for (const auto& [a, b] : edges) {
    const VertexId u = p.graph().index_of(a), v = p.graph().index_of(b);
    if (!p.graph().has_edge(Edge::make(u, v))) throw NoSuchEdge(a + "-" + b + " is not an edge");
    f.insert(Edge::make(u, v));
  }
  return f;
}

PropertyId property(const std::string& name) {
  const auto id = parse_property_id(name);
  if (!id) throw py::value_error("unknown property '" + name + "'");
  return *id;
}

Budgets budgets(std::uint64_t max_nodes) {
  Budgets b;
  b.max_nodes = max_nodes;
  return b;
}

}  // namespace

PYBIND11_MODULE(_ffactor, m) {
  m.doc() = "Perfect f-factors of graphs: obstructions, augmenting trails, streaming";

  auto base = py::register_exception<Error>(m, "FFactorError", PyExc_ValueError);
  py::register_exception<ClassCViolation>(m, "ClassCViolation", base);
  py::register_exception<MalformedEdge>(m, "MalformedEdge", base);
  py::register_exception<NoSuchEdge>(m, "NoSuchEdge", base);
  py::register_exception<NotAFactor>(m, "NotAFactor", base);
  py::register_exception<InfiniteCapacityUnsupported>(m, "InfiniteCapacityUnsupported", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
  py::register_exception<NotDeficient>(m, "NotDeficient", base);
  py::register_exception<NotAugmenting>(m, "NotAugmenting", base);
  py::register_exception<PropertyDoesNotHold>(m, "PropertyDoesNotHold", base);
  py::register_exception<InternalHereditaryFailure>(m, "InternalHereditaryFailure", base);
  py::register_exception<ChooserFailure>(m, "ChooserFailure", base);
  py::register_exception<DeclarationViolated>(m, "DeclarationViolated", base);
  py::register_exception<CapacityUnderflow>(m, "CapacityUnderflow", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<FactorProblem>(m, "Problem")
      .def(py::init([](const std::vector<std::string>& vertices,
                       const std::vector<NamedEdge>& edges,
                       const std::map<std::string, std::uint32_t>& f) {
             std::map<std::string, Capacity> caps;
             for (const auto& [v, c] : f) caps.emplace(v, Capacity(c));
             return FactorProblem::build(vertices, edges, caps);
           }),
           py::arg("vertices"), py::arg("edges"), py::arg("f"))
      .def_static("from_json", [](const std::string& text) { return io::parse_instance(text); })
      .def("to_json", &io::format_instance)
      .def_property_readonly("vertices", [](const FactorProblem& p) { return p.graph().names(); })
      .def_property_readonly("edges",
                             [](const FactorProblem& p) {
                               std::vector<NamedEdge> out;
                               for (const Edge& e : p.graph().edges()) {
                                 out.emplace_back(p.graph().name(e.u), p.graph().name(e.v));
                               }
                               return out;
                             })
      .def("capacity",
           [](const FactorProblem& p, const std::string& v) {
             return p.capacity(p.graph().index_of(v)).value();
           })
      .def("is_factor",
           [](const FactorProblem& p, const std::vector<NamedEdge>& f) {
             return p.is_factor(unnamed(p, f));
           })
      .def("is_perfect",
           [](const FactorProblem& p, const std::vector<NamedEdge>& f) {
             return p.is_perfect(unnamed(p, f));
           })
      .def("__eq__", [](const FactorProblem& a, const FactorProblem& b) { return a == b; })
      .def("__repr__",
           [](const FactorProblem& p) { return "Problem(" + io::format_instance(p) + ")"; });

  m.def("solve",
        [](const FactorProblem& p) -> std::optional<std::vector<NamedEdge>> {
          auto f = solve_by_augmentation(p);
          if (!f) return std::nullopt;
          return named(p, *f);
        },
        py::arg("problem"), "Perfect factor by augmenting trails, or None.");
  m.def("bruteforce",
        [](const FactorProblem& p) -> std::optional<std::vector<NamedEdge>> {
          auto f = perfect_factor_bruteforce(p);
          if (!f) return std::nullopt;
          return named(p, *f);
        },
        py::arg("problem"), "First perfect factor by subset search, or None.");
  m.def("rank",
        [](const FactorProblem& p, std::uint64_t max_nodes) -> std::optional<std::uint32_t> {
          const Rank r = obstruction_rank(p, budgets(max_nodes).obstruction());
          if (!r.is_obstruction()) return std::nullopt;
          return r.alpha();
        },
        py::arg("problem"), py::arg("max_nodes") = Budgets{}.max_nodes,
        "Least obstruction rank, or None when P2 holds.");
  m.def("_witness_json",
        [](const FactorProblem& p) -> std::optional<std::string> {
          auto w = obstruction_witness(p);
          if (!w) return std::nullopt;
          return io::witness_to_json(p, *w).dump();
        },
        py::arg("problem"));
  m.def("check_property",
        [](const FactorProblem& p, const std::string& name, std::uint64_t max_nodes) {
          return check_property(property(name), p, budgets(max_nodes));
        },
        py::arg("problem"), py::arg("property"), py::arg("max_nodes") = Budgets{}.max_nodes);
  m.def("hereditary_step",
        [](const FactorProblem& p, const std::string& name) {
          std::map<std::string, std::optional<std::string>> out;
          for (const auto& e : hereditary_step(property(name), p).entries) {
            out[p.graph().name(e.vertex)] =
                e.witness ? std::optional(p.graph().name(*e.witness)) : std::nullopt;
          }
          return out;
        },
        py::arg("problem"), py::arg("property"));
  m.def("find_augmenting_trail",
        [](const FactorProblem& p, const std::vector<NamedEdge>& factor,
           const std::string& x) -> std::optional<std::vector<std::string>> {
          auto t = find_augmenting_trail(p, unnamed(p, factor), p.graph().index_of(x));
          if (!t) return std::nullopt;
          std::vector<std::string> out;
          for (VertexId v : t->vertices) out.push_back(p.graph().name(v));
          return out;
        },
        py::arg("problem"), py::arg("factor"), py::arg("x"));
  m.def("to_dot",
        [](const FactorProblem& p, std::optional<std::vector<NamedEdge>> factor) {
          std::optional<Factor> f;
          if (factor) f = unnamed(p, *factor);
          return io::to_dot(p, f);
        },
        py::arg("problem"), py::arg("factor") = py::none());
  m.def("_stream_json",
        [](const std::string& family, const std::string& f, std::size_t steps) {
          const Capacity cap = io::parse_capacity(
              f == "omega" ? io::Json(f) : io::Json(std::stoul(f)), "f");
          auto source = stream::make_family(family, cap);
          auto chooser = stream::known_factor_chooser(stream::declared_factor(*source));
          const auto report = stream::stream_factor(*source, *chooser, steps);
          return io::stream_report_to_json(report, *source, *chooser).dump();
        },
        py::arg("family"), py::arg("f"), py::arg("steps"));
  m.def("family_names", &stream::family_names);
  m.def("run_suite",
        [](std::uint64_t seed, std::size_t workers, std::size_t max_vertices,
           std::size_t random_instances, std::size_t trail_instances,
           std::size_t stream_instances) {
          suite::RunConfig c;
          c.seed = seed;
          c.workers = workers;
          c.max_vertices = max_vertices;
          c.random_instances = random_instances;
          c.trail_instances = trail_instances;
          c.stream_instances = stream_instances;
          py::gil_scoped_release release;
          const auto report = suite::run_suite(c);
          return std::make_pair(report.passed(), suite::format_report(report));
        },
        py::arg("seed") = universe::kDefaultSeed, py::arg("workers") = 1,
        py::arg("max_vertices") = 4, py::arg("random_instances") = 2000,
        py::arg("trail_instances") = 500, py::arg("stream_instances") = 100,
        "Returns (passed, report text).");

  m.attr("DEFAULT_SEED") = universe::kDefaultSeed;
}
