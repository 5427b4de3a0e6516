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

#include <sstream>

#include <gtest/gtest.h>

#include "seqsub/errors.h"
#include "seqsub/solvers.h"
#include "test_support.h"

namespace seqsub {
namespace {

HypergraphDocument Trilogy() {
  HypergraphDocument doc;
  doc.graph = testing::LotrGraph();
  doc.vertex_names = {"F", "T", "R"};
  return doc;
}

void ExpectSameGraph(const DirectedHypergraph& a, const DirectedHypergraph& b) {
  ASSERT_EQ(a.num_vertices(), b.num_vertices());
  ASSERT_EQ(a.num_edges(), b.num_edges());
  for (std::size_t i = 0; i < a.num_edges(); ++i) {
    EXPECT_EQ(a.edge(static_cast<EdgeId>(i)).vertices,
              b.edge(static_cast<EdgeId>(i)).vertices);
    EXPECT_EQ(a.edge(static_cast<EdgeId>(i)).value,
              b.edge(static_cast<EdgeId>(i)).value);
  }
}

TEST(JsonTest, RoundTrip) {
  const HypergraphDocument doc = Trilogy();
  const nlohmann::json j = HypergraphToJson(doc);
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(j.at("utility"), "modular-count");
  const HypergraphDocument back = HypergraphFromJson(j);
  ExpectSameGraph(doc.graph, back.graph);
  EXPECT_EQ(back.vertex_names, doc.vertex_names);
  EXPECT_EQ(back.utility, UtilityKind::kModularCount);
}

TEST(JsonTest, RejectsBadDocuments) {
  EXPECT_THROW(HypergraphFromJson(nlohmann::json::array()), InputError);
  EXPECT_THROW(HypergraphFromJson({{"n", 2}}), InputError);
  EXPECT_THROW(HypergraphFromJson(
                   {{"n", 2},
                    {"edges", {{{"vertices", {0, 5}}, {"value", 1.0}}}}}),
               InputError);
  EXPECT_THROW(HypergraphFromJson({{"n", 1},
                                   {"utility", "mystery"},
                                   {"edges", nlohmann::json::array()}}),
               InputError);
  EXPECT_THROW(HypergraphFromJson({{"schema_version", 99},
                                   {"n", 1},
                                   {"edges", nlohmann::json::array()}}),
               InputError);
}

TEST(CsvTest, RoundTrip) {
  HypergraphDocument doc = Trilogy();
  doc.vertex_names.clear();
  doc.utility = UtilityKind::kProbabilisticCoverage;
  std::ostringstream out;
  WriteHypergraphCsv(out, doc);
  std::istringstream in(out.str());
  const HypergraphDocument back = ReadHypergraphCsv(in);
  ExpectSameGraph(doc.graph, back.graph);
  EXPECT_EQ(back.utility, UtilityKind::kProbabilisticCoverage);
}

TEST(CsvTest, ParsesHandWrittenFile) {
  std::istringstream in("# n=4\nvertices,value\n0;1;2,0.5\n3,1\n");
  const HypergraphDocument doc = ReadHypergraphCsv(in);
  EXPECT_EQ(doc.graph.num_vertices(), 4);
  ASSERT_EQ(doc.graph.num_edges(), 2u);
  EXPECT_EQ(doc.graph.edge(0).vertices, (std::vector<VertexId>{0, 1, 2}));
  std::istringstream bad("# n=4\n0;x,1\n");
  EXPECT_THROW(ReadHypergraphCsv(bad), ParseError);
}

TEST(ParseSequenceTest, NamesAndIds) {
  const std::vector<std::string> names = {"F", "T", "R"};
  EXPECT_EQ(ParseSequence("F, R", names, 3), (Sequence{0, 2}));
  EXPECT_EQ(ParseSequence("1,0", names, 3), (Sequence{1, 0}));
  EXPECT_EQ(ParseSequence("", names, 3), Sequence{});
  EXPECT_THROW(ParseSequence("X", names, 3), InputError);
  EXPECT_THROW(ParseSequence("5", names, 3), InputError);
  EXPECT_THROW(ParseSequence("F,F", names, 3), InputError);
}

TEST(ReportJsonTest, CarriesTraceBoundAndNames) {
  const HypergraphDocument doc = Trilogy();
  const ModularUtility h(std::vector<double>(doc.graph.num_edges(), 1.0));
  SolveConfig c;
  c.k = 2;
  const SolveReport r = SequenceGreedyForward(doc.graph, h, c);
  const nlohmann::json j = SolveReportToJson(r, doc.vertex_names);
  EXPECT_EQ(j.at("objective"), 3.0);
  EXPECT_EQ(j.at("sigma_names"), (std::vector<std::string>{"F", "T"}));
  EXPECT_EQ(j.at("tie_break"), "smallest-edge-id");
  EXPECT_EQ(j.at("trace").size(), 1u);
  EXPECT_GT(j.at("bound").get<double>(), 0.0);
}

TEST(CountsJsonTest, RoundTrip) {
  const std::vector<Sequence> users = {{0, 1, 2}, {0, 2}, {2, 1}};
  const SubsequenceCounts counts = CountSubsequences(users, 2);
  const SubsequenceCounts back = CountsFromJson(CountsToJson(counts, 1));
  EXPECT_EQ(back.SortedEntries(), counts.SortedEntries());
  EXPECT_EQ(back.num_users(), 3);
}

}  // namespace
}  // namespace seqsub
