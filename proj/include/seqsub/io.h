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

// File formats.
//
// Hypergraph JSON:
//   {"schema_version": 1, "n": 3, "utility": "modular-count",
//    "vertex_names": ["F", "T", "R"],            (optional)
//    "edges": [{"vertices": [0, 1], "value": 1.0}, ...]}
// "utility" is "modular-count" (values are weights) or
// "probabilistic-coverage" (values are probabilities); it defaults to
// modular-count. Trained models add "training" metadata and a per-edge
// "count" (N_s); readers ignore both.
//
// Hypergraph CSV: one edge per row, "<v0;v1;...>,<value>". Blank lines are
// skipped, an optional "vertices,value" header is allowed, and comment
// lines may carry "# n=<count>" and "# utility=<kind>" directives. Without
// an n directive n is one more than the largest vertex id.

#ifndef SEQSUB_IO_H_
#define SEQSUB_IO_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "seqsub/eval.h"
#include "seqsub/hypergraph.h"
#include "seqsub/ingest.h"
#include "seqsub/oracle.h"
#include "seqsub/solvers.h"
#include "seqsub/utility.h"

namespace seqsub {

inline constexpr int kSchemaVersion = 1;

struct HypergraphDocument {
  DirectedHypergraph graph;
  UtilityKind utility = UtilityKind::kModularCount;
  std::vector<std::string> vertex_names;  // empty or one per vertex
};

// All readers throw InputError on malformed documents.
HypergraphDocument HypergraphFromJson(const nlohmann::json& doc);
nlohmann::json HypergraphToJson(const HypergraphDocument& doc);

HypergraphDocument ReadHypergraphCsv(std::istream& in);
void WriteHypergraphCsv(std::ostream& out, const HypergraphDocument& doc);

// Picks the CSV reader for a ".csv" suffix, JSON otherwise.
HypergraphDocument ReadHypergraphFile(const std::string& path);

// A trained model as a hypergraph document plus training metadata.
nlohmann::json TrainedModelToJson(const TrainedModel& model,
                                  std::span<const std::string> item_names,
                                  int max_edge_size);

nlohmann::json CountsToJson(const SubsequenceCounts& counts,
                            std::int64_t min_count);
SubsequenceCounts CountsFromJson(const nlohmann::json& doc);

nlohmann::json SolveReportToJson(const SolveReport& report,
                                 std::span<const std::string> names = {});
nlohmann::json OracleResultToJson(const OracleResult& result);
nlohmann::json EvalReportsToJson(std::span<const EvalReport> reports,
                                 std::span<const std::string> names = {});

// Resolves comma-separated vertex names (or integer ids when no names are
// known) into a Sequence.
Sequence ParseSequence(const std::string& text,
                       std::span<const std::string> names,
                       std::int64_t num_vertices);

nlohmann::json ReadJsonFile(const std::string& path);
// Writes `doc` with two-space indentation and a trailing newline.
void WriteJsonFile(const std::string& path, const nlohmann::json& doc);

}  // namespace seqsub

#endif  // SEQSUB_IO_H_
