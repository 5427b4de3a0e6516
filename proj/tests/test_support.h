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

// Fixtures and deliberately naive reference implementations. Nothing here
// calls into the library's own induced-edge, counting or greedy code.

#ifndef SEQSUB_TESTS_TEST_SUPPORT_H_
#define SEQSUB_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "seqsub/hypergraph.h"
#include "seqsub/utility.h"

namespace seqsub {

// Readable gtest failure messages.
void PrintTo(const Sequence& sigma, std::ostream* os);
void PrintTo(const EdgeSet& edges, std::ostream* os);

}  // namespace seqsub

namespace seqsub::testing {

// The trilogy graph: F=0, T=1, R=2. Ordering edges come first so that the
// smallest-id tie break prefers (F,T) when every weight is 1.
inline constexpr VertexId kF = 0;
inline constexpr VertexId kT = 1;
inline constexpr VertexId kR = 2;
DirectedHypergraph LotrGraph();

// Edges whose vertices occur in sigma at strictly increasing positions.
std::vector<EdgeId> NaiveInducedEdges(const DirectedHypergraph& graph,
                                      const std::vector<VertexId>& sigma);

// Pairwise rule {(s_i, s_j) in E : i <= j}, for graphs with |e| <= 2.
std::vector<EdgeId> PairwiseInducedEdges(const DirectedHypergraph& graph,
                                         const std::vector<VertexId>& sigma);

// Calls fn on every non-repeating sequence over [0, n) of length 0..k.
void ForEachSequence(int n, int k,
                     const std::function<void(const std::vector<VertexId>&)>& fn);

// Utility value of sigma through the naive induced-edge rule.
double NaiveObjective(const DirectedHypergraph& graph,
                      const UtilityFunction& h,
                      const std::vector<VertexId>& sigma);

// Best value over all sequences of length <= k, by plain enumeration.
double NaiveOptimum(const DirectedHypergraph& graph, const UtilityFunction& h,
                    int k);

bool NaiveIsSubsequence(const std::vector<VertexId>& needle,
                        const std::vector<VertexId>& haystack);

// Number of users containing s as an order-preserving subsequence.
std::int64_t NaiveCount(const std::vector<std::vector<VertexId>>& users,
                        const std::vector<VertexId>& s);

// p_s for every tuple of length 1..max_size over [0, num_items) with
// N_s >= min_count, computed by direct recursion on the training formula.
std::map<std::vector<VertexId>, double> NaiveEdgeProbabilities(
    const std::vector<std::vector<VertexId>>& users, int num_items,
    int max_size, double d, std::int64_t min_count,
    const std::optional<std::vector<VertexId>>& history);

// Vertex-level greedy for self-loop-only graphs: repeatedly add the vertex
// whose self-loops raise h the most (ties to the smallest vertex id).
std::vector<VertexId> ClassicalGreedy(const DirectedHypergraph& graph,
                                      const UtilityFunction& h, int k);

// A random graph where every vertex carries at most one self-loop and there
// are no longer edges.
DirectedHypergraph RandomSelfLoopGraph(std::mt19937_64& rng, int n);

// Random (S subset of T, e) triple over m edge ids.
struct SubsetTriple {
  EdgeSet s;
  EdgeSet t;
  EdgeId e = 0;
};
SubsetTriple RandomTriple(std::mt19937_64& rng, int m);

std::vector<VertexId> ToVector(const Sequence& sigma);

// Ten hand-written user histories over six items, with shared prefixes and
// reversals so both training branches see nontrivial counts.
inline constexpr int kCorpusItems = 6;
std::vector<std::vector<VertexId>> TenUserCorpus();

}  // namespace seqsub::testing

#endif  // SEQSUB_TESTS_TEST_SUPPORT_H_
