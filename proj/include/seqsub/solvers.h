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

// Greedy solvers for maximizing f(sigma) = h(E(sigma)).
//
// Sequence-Greedy works on digraphs (edges of at most two vertices) and
// picks the best edge whose endpoint (forward) or start point (backward) is
// not yet in sigma. Hyper Sequence-Greedy works on any hypergraph and picks
// the best edge whose already-chosen vertices form a prefix (forward) or
// suffix (backward) of it, then appends or prepends the missing vertices.
//
// All argmax scans break ties by the smallest edge id.

#ifndef SEQSUB_SOLVERS_H_
#define SEQSUB_SOLVERS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "seqsub/hypergraph.h"
#include "seqsub/utility.h"

namespace seqsub {

enum class Direction { kForward, kBackward, kBoth };
enum class TieBreak { kSmallestEdgeId };
enum class Algorithm { kSequenceGreedy, kHyperSequenceGreedy, kFrequency };

std::string_view DirectionName(Direction d);
std::optional<Direction> ParseDirection(std::string_view name);
std::string_view TieBreakName(TieBreak t);
std::string_view AlgorithmName(Algorithm a);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct SolveConfig {
  int k = 1;
  Direction direction = Direction::kForward;
  // Unset means the algorithm default: on for Hyper Sequence-Greedy, off for
  // Sequence-Greedy.
  std::optional<bool> fill_to_k;
  TieBreak tie_break = TieBreak::kSmallestEdgeId;
};

struct TraceStep {
  EdgeId edge = -1;
  // h(edge | E(sigma)) at selection time.
  double gain = 0.0;
  // f(sigma after) - f(sigma before). At least `gain`; larger when the new
  // vertices also induce other edges.
  double increment = 0.0;
  std::size_t sigma_size = 0;  // |sigma| after the step
  bool fill = false;           // chosen by the fill-to-k phase
};

struct SolveReport {
  Algorithm algorithm = Algorithm::kSequenceGreedy;
  Sequence sigma;
  double objective = 0.0;  // h(E(sigma)), recomputed from scratch
  std::vector<TraceStep> trace;
  double bound = 0.0;  // approximation guarantee for this instance
  Direction direction_used = Direction::kForward;
  TieBreak tie_break = TieBreak::kSmallestEdgeId;
  int k = 0;
  bool fill_to_k = false;
};

// Finite-k guarantee. r <= 2 uses the digraph bound
//   (1 - e^{-(1 - 1/k)}) / (2 d + 1),
// larger r uses
//   (1 - e^{-(1 - r/k)}) / (r d + 1),
// with d = d_in forward, d_out backward, and the better of the two for kBoth.
// Negative values (k < r) are reported as 0.
double ApproxBound(int k, int max_in_degree, int max_out_degree, int r,
                   Direction direction);
// The k -> infinity limit (1 - 1/e) / (r * delta + 1).
double AsymptoticBound(int delta, int r);

// Algorithm 1 / 2 of the digraph setting. Throws InputError if any edge has
// more than two vertices.
SolveReport SequenceGreedyForward(const DirectedHypergraph& graph,
                                  const UtilityFunction& h,
                                  const SolveConfig& config);
SolveReport SequenceGreedyBackward(const DirectedHypergraph& graph,
                                   const UtilityFunction& h,
                                   const SolveConfig& config);

SolveReport HyperSequenceGreedyForward(const DirectedHypergraph& graph,
                                       const UtilityFunction& h,
                                       const SolveConfig& config);
SolveReport HyperSequenceGreedyBackward(const DirectedHypergraph& graph,
                                        const UtilityFunction& h,
                                        const SolveConfig& config);

// Higher objective of two reports; ties go to `forward`. The returned bound
// is the better of the two directional bounds.
SolveReport PickBetter(SolveReport forward, SolveReport backward);

// Runs forward and backward and keeps the better one.
SolveReport BestOfBoth(const DirectedHypergraph& graph,
                       const UtilityFunction& h, const SolveConfig& config,
                       Algorithm algorithm);

// Most valuable vertices by self-loop value (0 when a vertex has none; the
// largest value when it has several), skipping `history`. Ties go to the
// smaller vertex id. Carries no approximation bound.
SolveReport FrequencyBaseline(const DirectedHypergraph& graph,
                              const UtilityFunction& h, int k,
                              const Sequence& history);

// Dispatches on algorithm and config.direction.
SolveReport Solve(const DirectedHypergraph& graph, const UtilityFunction& h,
                  Algorithm algorithm, const SolveConfig& config,
                  const Sequence& history = {});

}  // namespace seqsub

#endif  // SEQSUB_SOLVERS_H_
