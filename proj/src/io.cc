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

#include "seqsub/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "seqsub/errors.h"

namespace seqsub {

using nlohmann::json;

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
bool ParseNumber(std::string_view text, T& out) {
  text = Trim(text);
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && !text.empty();
}

UtilityKind UtilityFromName(const std::string& name) {
  const auto kind = ParseUtilityKind(name);
  if (!kind) throw InputError("unknown utility '" + name + "'");
  return *kind;
}

}  // namespace

HypergraphDocument HypergraphFromJson(const json& doc) {
  try {
    if (!doc.is_object()) throw InputError("hypergraph JSON must be an object");
    if (doc.contains("schema_version") &&
        doc.at("schema_version").get<int>() > kSchemaVersion) {
      throw InputError("unsupported schema_version " +
                       doc.at("schema_version").dump());
    }
    HypergraphDocument out;
    const auto n = doc.at("n").get<std::int64_t>();
    if (doc.contains("utility")) {
      out.utility = UtilityFromName(doc.at("utility").get<std::string>());
    }
    if (doc.contains("vertex_names")) {
      out.vertex_names = doc.at("vertex_names").get<std::vector<std::string>>();
      if (static_cast<std::int64_t>(out.vertex_names.size()) != n) {
        throw InputError("vertex_names has " +
                         std::to_string(out.vertex_names.size()) +
                         " entries for n=" + std::to_string(n));
      }
    }
    std::vector<Hyperedge> edges;
    for (const json& e : doc.at("edges")) {
      edges.push_back({e.at("vertices").get<std::vector<VertexId>>(),
                       e.at("value").get<double>()});
    }
    out.graph = DirectedHypergraph(n, std::move(edges));
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("hypergraph JSON: ") + e.what());
  }
}

json HypergraphToJson(const HypergraphDocument& doc) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["n"] = doc.graph.num_vertices();
  out["utility"] = std::string(UtilityKindName(doc.utility));
  if (!doc.vertex_names.empty()) out["vertex_names"] = doc.vertex_names;
  json edges = json::array();
  for (const Hyperedge& e : doc.graph.edges()) {
    edges.push_back({{"vertices", e.vertices}, {"value", e.value}});
  }
  out["edges"] = std::move(edges);
  return out;
}

HypergraphDocument ReadHypergraphCsv(std::istream& in) {
  HypergraphDocument out;
  std::int64_t n = -1;
  std::int64_t max_id = -1;
  std::vector<Hyperedge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = Trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      text.remove_prefix(1);
      text = Trim(text);
      if (text.starts_with("n=")) {
        if (!ParseNumber(text.substr(2), n) || n < 0) {
          throw ParseError(line_no, "bad n directive");
        }
      } else if (text.starts_with("utility=")) {
        out.utility = UtilityFromName(std::string(Trim(text.substr(8))));
      }
      continue;
    }
    if (text == "vertices,value") continue;
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(line_no, "expected '<vertices>,<value>'");
    }
    Hyperedge edge;
    if (!ParseNumber(text.substr(comma + 1), edge.value)) {
      throw ParseError(line_no, "bad edge value");
    }
    std::string_view ids = text.substr(0, comma);
    while (true) {
      const std::size_t semi = ids.find(';');
      VertexId v = 0;
      if (!ParseNumber(ids.substr(0, semi), v)) {
        throw ParseError(line_no, "bad vertex id");
      }
      edge.vertices.push_back(v);
      max_id = std::max<std::int64_t>(max_id, v);
      if (semi == std::string_view::npos) break;
      ids.remove_prefix(semi + 1);
    }
    edges.push_back(std::move(edge));
  }
  out.graph = DirectedHypergraph(n >= 0 ? n : max_id + 1, std::move(edges));
  return out;
}

void WriteHypergraphCsv(std::ostream& out, const HypergraphDocument& doc) {
  const auto old_precision = out.precision(17);
  out << "# n=" << doc.graph.num_vertices() << '\n'
      << "# utility=" << UtilityKindName(doc.utility) << '\n'
      << "vertices,value\n";
  for (const Hyperedge& e : doc.graph.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      out << (i ? ";" : "") << e.vertices[i];
    }
    out << ',' << e.value << '\n';
  }
  out.precision(old_precision);
}

HypergraphDocument ReadHypergraphFile(const std::string& path) {
  if (path.ends_with(".csv")) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return ReadHypergraphCsv(in);
  }
  return HypergraphFromJson(ReadJsonFile(path));
}

json TrainedModelToJson(const TrainedModel& model,
                        std::span<const std::string> item_names,
                        int max_edge_size) {
  HypergraphDocument doc;
  doc.graph = model.graph;
  doc.utility = UtilityKind::kProbabilisticCoverage;
  doc.vertex_names.assign(item_names.begin(), item_names.end());
  json out = HypergraphToJson(doc);
  for (std::size_t i = 0; i < model.edge_counts.size(); ++i) {
    out["edges"][i]["count"] = model.edge_counts[i];
  }
  out["training"] = {{"num_users", model.num_users},
                     {"smoothing", model.smoothing},
                     {"max_edge_size", max_edge_size},
                     {"history_aware", model.history_aware}};
  return out;
}

json CountsToJson(const SubsequenceCounts& counts, std::int64_t min_count) {
  json entries = json::array();
  for (const auto& [s, c] : counts.SortedEntries()) {
    if (c < min_count) continue;
    entries.push_back(
        {{"sequence", std::vector<VertexId>(s.items().begin(),
                                            s.items().end())},
         {"count", c}});
  }
  return {{"schema_version", kSchemaVersion},
          {"num_users", counts.num_users()},
          {"max_edge_size", counts.max_size()},
          {"counts", std::move(entries)}};
}

SubsequenceCounts CountsFromJson(const json& doc) {
  try {
    SubsequenceCounts counts(doc.at("max_edge_size").get<int>());
    counts.set_num_users(doc.at("num_users").get<std::int64_t>());
    for (const json& e : doc.at("counts")) {
      const auto s = e.at("sequence").get<std::vector<VertexId>>();
      if (s.empty() || s.size() > kMaxEdgeSizeLimit) {
        throw InputError("counts: sequence length out of range");
      }
      counts.Set(ItemTuple(s), e.at("count").get<std::int64_t>());
    }
    return counts;
  } catch (const json::exception& e) {
    throw InputError(std::string("counts JSON: ") + e.what());
  }
}

namespace {

json SequenceJson(const Sequence& s) {
  return std::vector<VertexId>(s.begin(), s.end());
}

json NamesJson(const Sequence& s, std::span<const std::string> names) {
  json out = json::array();
  for (VertexId v : s) out.push_back(names[v]);
  return out;
}

}  // namespace

json SolveReportToJson(const SolveReport& report,
                       std::span<const std::string> names) {
  json trace = json::array();
  for (const TraceStep& t : report.trace) {
    trace.push_back({{"edge", t.edge},
                     {"gain", t.gain},
                     {"increment", t.increment},
                     {"sigma_size", t.sigma_size},
                     {"fill", t.fill}});
  }
  json out = {{"schema_version", kSchemaVersion},
              {"algorithm", std::string(AlgorithmName(report.algorithm))},
              {"direction_used",
               std::string(DirectionName(report.direction_used))},
              {"tie_break", std::string(TieBreakName(report.tie_break))},
              {"k", report.k},
              {"fill_to_k", report.fill_to_k},
              {"sigma", SequenceJson(report.sigma)},
              {"objective", report.objective},
              {"bound", report.bound},
              {"trace", std::move(trace)}};
  if (!names.empty()) out["sigma_names"] = NamesJson(report.sigma, names);
  return out;
}

json OracleResultToJson(const OracleResult& result) {
  return {{"sigma_star", SequenceJson(result.sigma_star)},
          {"opt_value", result.opt_value},
          {"sequences_examined", result.sequences_examined}};
}

json EvalReportsToJson(std::span<const EvalReport> reports,
                       std::span<const std::string> names) {
  json out = json::array();
  for (const EvalReport& r : reports) {
    json users = json::array();
    for (const UserScore& u : r.users) {
      json entry = {{"user", u.user},
                    {"tau", u.tau},
                    {"objective", u.objective},
                    {"predicted", SequenceJson(u.predicted)},
                    {"actual", SequenceJson(u.actual)}};
      if (!names.empty()) {
        entry["predicted_names"] = NamesJson(u.predicted, names);
        entry["actual_names"] = NamesJson(u.actual, names);
      }
      users.push_back(std::move(entry));
    }
    json entry = {{"fold", r.fold},
                  {"algorithm", r.algorithm},
                  {"k", r.k},
                  {"mean_tau", r.mean_tau},
                  {"mean_objective", r.mean_objective},
                  {"users_evaluated", r.users.size()},
                  {"users_skipped", r.users_skipped},
                  {"train_users", r.train_users},
                  {"test_users", r.test_users},
                  {"train_events", r.train_events},
                  {"users", std::move(users)}};
    if (!r.error.empty()) entry["error"] = r.error;
    out.push_back(std::move(entry));
  }
  return {{"schema_version", kSchemaVersion}, {"reports", std::move(out)}};
}

Sequence ParseSequence(const std::string& text,
                       std::span<const std::string> names,
                       std::int64_t num_vertices) {
  std::vector<VertexId> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const std::string_view t = Trim(token);
    if (t.empty()) continue;
    const auto it = std::find(names.begin(), names.end(), t);
    if (it != names.end()) {
      out.push_back(static_cast<VertexId>(it - names.begin()));
      continue;
    }
    VertexId v = 0;
    if (!ParseNumber(t, v)) {
      throw InputError("unknown vertex '" + std::string(t) + "'");
    }
    out.push_back(v);
  }
  Sequence seq(std::move(out));
  seq.ValidateFor(num_vertices);
  return seq;
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace seqsub
