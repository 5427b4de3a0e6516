// Copyright 2026 The seqsub Authors.
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
#include <vector>

#include "seqsub/errors.h"
#include "seqsub/eval.h"
#include "seqsub/hypergraph.h"
#include "seqsub/ingest.h"
#include "seqsub/io.h"
#include "seqsub/oracle.h"
#include "seqsub/solvers.h"
#include "seqsub/utility.h"

namespace py = pybind11;

namespace seqsub {
namespace {

DirectedHypergraph MakeGraph(
    std::int64_t n,
    const std::vector<std::pair<std::vector<VertexId>, double>>& edges) {
  std::vector<Hyperedge> out;
  out.reserve(edges.size());
  for (const auto& [vertices, value] : edges) out.push_back({vertices, value});
  return DirectedHypergraph(n, std::move(out));
}

UtilityKind Kind(const std::string& name) {
  const auto kind = ParseUtilityKind(name);
  if (!kind) throw ConfigError("unknown utility '" + name + "'");
  return *kind;
}

std::vector<VertexId> ToList(const Sequence& s) {
  return {s.begin(), s.end()};
}

py::dict ReportDict(const SolveReport& r) {
  py::list trace;
  for (const TraceStep& t : r.trace) {
    py::dict step;
    step["edge"] = t.edge;
    step["gain"] = t.gain;
    step["increment"] = t.increment;
    step["sigma_size"] = t.sigma_size;
    step["fill"] = t.fill;
    trace.append(step);
  }
  py::dict d;
  d["algorithm"] = std::string(AlgorithmName(r.algorithm));
  d["sigma"] = ToList(r.sigma);
  d["objective"] = r.objective;
  d["bound"] = r.bound;
  d["direction_used"] = std::string(DirectionName(r.direction_used));
  d["tie_break"] = std::string(TieBreakName(r.tie_break));
  d["k"] = r.k;
  d["fill_to_k"] = r.fill_to_k;
  d["trace"] = trace;
  return d;
}

py::dict SolvePy(const DirectedHypergraph& g, int k,
                 const std::string& algorithm, const std::string& direction,
                 std::optional<bool> fill_to_k, const std::string& utility,
                 const std::vector<VertexId>& history) {
  const auto algo = ParseAlgorithm(algorithm);
  if (!algo) throw ConfigError("unknown algorithm '" + algorithm + "'");
  const auto dir = ParseDirection(direction);
  if (!dir) throw ConfigError("unknown direction '" + direction + "'");
  SolveConfig cfg;
  cfg.k = k;
  cfg.direction = *dir;
  cfg.fill_to_k = fill_to_k;
  const auto h = MakeUtility(Kind(utility), g);
  SolveReport report;
  {
    py::gil_scoped_release release;
    report = Solve(g, *h, *algo, cfg, Sequence(history));
  }
  return ReportDict(report);
}

py::dict OraclePy(const DirectedHypergraph& g, int k,
                  const std::string& utility, std::uint64_t cap) {
  const auto h = MakeUtility(Kind(utility), g);
  OracleResult r;
  {
    py::gil_scoped_release release;
    r = BruteForceOpt(g, *h, k, cap);
  }
  py::dict d;
  d["sigma_star"] = ToList(r.sigma_star);
  d["opt_value"] = r.opt_value;
  d["sequences_examined"] = r.sequences_examined;
  return d;
}

py::tuple TrainPy(const std::string& path, int max_edge_size, double d,
                  std::int64_t min_count,
                  const std::optional<std::vector<std::string>>& history) {
  TrainConfig cfg;
  cfg.max_edge_size = max_edge_size;
  cfg.smoothing = d;
  cfg.min_count = min_count;
  cfg.Validate();
  const InteractionLog log = ReadInteractionLogFile(path);
  std::vector<Sequence> users;
  for (const UserSequence& u : ExtractUserSequences(log, cfg)) {
    users.push_back(u.items);
  }
  std::optional<Sequence> hist;
  if (history) {
    std::vector<VertexId> ids;
    for (const std::string& name : *history) {
      const auto id = log.items.Find(name);
      if (!id) throw InputError("unknown item '" + name + "'");
      ids.push_back(*id);
    }
    hist = Sequence(ids);
  }
  const auto n = static_cast<std::int64_t>(log.items.size());
  TrainedModel model =
      BuildModel(CountSubsequences(users, max_edge_size), n, cfg, hist);
  std::vector<std::string> names(log.items.names().begin(),
                                 log.items.names().end());
  return py::make_tuple(std::move(model.graph), names);
}

py::tuple LoadPy(const std::string& path) {
  HypergraphDocument doc = ReadHypergraphFile(path);
  return py::make_tuple(std::move(doc.graph),
                        std::string(UtilityKindName(doc.utility)),
                        doc.vertex_names);
}

}  // namespace
}  // namespace seqsub

PYBIND11_MODULE(_seqsub, m) {
  using namespace seqsub;
  m.doc() = "Sequence submodular maximization over directed hypergraphs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());
  py::register_exception<UndefinedMetricError>(m, "UndefinedMetricError",
                                               base.ptr());

  py::class_<DirectedHypergraph>(m, "Hypergraph")
      .def(py::init(&MakeGraph), py::arg("n"), py::arg("edges"),
           "edges: list of (vertices, value) pairs")
      .def_property_readonly("num_vertices", &DirectedHypergraph::num_vertices)
      .def_property_readonly("num_edges", &DirectedHypergraph::num_edges)
      .def_property_readonly("max_edge_size",
                             &DirectedHypergraph::max_edge_size)
      .def_property_readonly("max_in_degree",
                             &DirectedHypergraph::max_in_degree)
      .def_property_readonly("max_out_degree",
                             &DirectedHypergraph::max_out_degree)
      .def_property_readonly("delta", &DirectedHypergraph::delta)
      .def_property_readonly(
          "edges",
          [](const DirectedHypergraph& g) {
            py::list out;
            for (const Hyperedge& e : g.edges()) {
              out.append(py::make_tuple(e.vertices, e.value));
            }
            return out;
          })
      .def(
          "induced_edges",
          [](const DirectedHypergraph& g, const std::vector<VertexId>& sigma) {
            const EdgeSet s = InducedEdges(g, Sequence(sigma));
            return std::vector<EdgeId>(s.begin(), s.end());
          },
          py::arg("sigma"))
      .def(
          "objective",
          [](const DirectedHypergraph& g, const std::vector<VertexId>& sigma,
             const std::string& utility) {
            return MakeUtility(Kind(utility), g)
                ->Value(InducedEdges(g, Sequence(sigma)));
          },
          py::arg("sigma"), py::arg("utility") = "modular-count")
      .def("__repr__", [](const DirectedHypergraph& g) {
        return "<Hypergraph n=" + std::to_string(g.num_vertices()) +
               " edges=" + std::to_string(g.num_edges()) +
               " r=" + std::to_string(g.max_edge_size()) + ">";
      });

  m.def("solve", &SolvePy, py::arg("graph"), py::arg("k"),
        py::arg("algorithm") = "hyper-sequence-greedy",
        py::arg("direction") = "forward", py::arg("fill_to_k") = py::none(),
        py::arg("utility") = "modular-count",
        py::arg("history") = std::vector<VertexId>{});
  m.def("brute_force_opt", &OraclePy, py::arg("graph"), py::arg("k"),
        py::arg("utility") = "modular-count",
        py::arg("cap") = kDefaultOracleCap);
  m.def(
      "approx_bound",
      [](int k, int din, int dout, int r, const std::string& direction) {
        const auto dir = ParseDirection(direction);
        if (!dir) throw ConfigError("unknown direction '" + direction + "'");
        return ApproxBound(k, din, dout, r, *dir);
      },
      py::arg("k"), py::arg("d_in"), py::arg("d_out"), py::arg("r"),
      py::arg("direction") = "forward");
  m.def("tau_accuracy",
        [](const std::vector<VertexId>& p, const std::vector<VertexId>& q) {
          return TauAccuracy(Sequence(p), Sequence(q));
        },
        py::arg("predicted"), py::arg("actual"));
  m.def("ordered_pairs", [](const std::vector<VertexId>& s) {
    return OrderedPairs(Sequence(s));
  });
  m.def("train", &TrainPy, py::arg("path"), py::arg("max_edge_size") = 3,
        py::arg("d") = 20.0, py::arg("min_count") = 2,
        py::arg("history") = py::none(),
        "Returns (hypergraph, item_names) trained from a user,item,timestamp "
        "CSV.");
  m.def("load_hypergraph", &LoadPy, py::arg("path"),
        "Returns (hypergraph, utility_name, vertex_names).");
}
