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

#include "seqsub/solvers.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "seqsub/errors.h"
#include "seqsub/internal/positions.h"

namespace seqsub {

std::string_view DirectionName(Direction d) {
  switch (d) {
    case Direction::kForward:
      return "forward";
    case Direction::kBackward:
      return "backward";
    case Direction::kBoth:
      return "both";
  }
  return "unknown";
}

std::optional<Direction> ParseDirection(std::string_view name) {
  if (name == "forward") return Direction::kForward;
  if (name == "backward") return Direction::kBackward;
  if (name == "both") return Direction::kBoth;
  return std::nullopt;
}

std::string_view TieBreakName(TieBreak) { return "smallest-edge-id"; }

std::string_view AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kSequenceGreedy:
      return "sequence-greedy";
    case Algorithm::kHyperSequenceGreedy:
      return "hyper-sequence-greedy";
    case Algorithm::kFrequency:
      return "frequency";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "sequence-greedy") return Algorithm::kSequenceGreedy;
  if (name == "hyper-sequence-greedy") return Algorithm::kHyperSequenceGreedy;
  if (name == "frequency") return Algorithm::kFrequency;
  return std::nullopt;
}

double ApproxBound(int k, int max_in_degree, int max_out_degree, int r,
                   Direction direction) {
  if (k <= 0) return 0.0;
  r = std::max(r, 1);
  auto one_side = [&](int degree) {
    // The digraph analysis loses only one slot to the last pick.
    const double lost = r == 2 ? 1.0 : static_cast<double>(r);
    const double numer = 1.0 - std::exp(-(1.0 - lost / k));
    return std::max(0.0, numer / (r * static_cast<double>(degree) + 1.0));
  };
  switch (direction) {
    case Direction::kForward:
      return one_side(max_in_degree);
    case Direction::kBackward:
      return one_side(max_out_degree);
    case Direction::kBoth:
      return std::max(one_side(max_in_degree), one_side(max_out_degree));
  }
  return 0.0;
}

double AsymptoticBound(int delta, int r) {
  return (1.0 - 1.0 / std::exp(1.0)) /
         (std::max(r, 1) * static_cast<double>(delta) + 1.0);
}

namespace {

enum class Family { kPairwise, kHyper };

// Grows sigma at either end while keeping the utility state equal to
// h(E(sigma)): every edge that becomes induced is added as soon as its
// boundary vertex arrives.
class SequenceBuilder {
 public:
  SequenceBuilder(const DirectedHypergraph& graph, UtilityState& state)
      : graph_(graph), state_(state), pos_(graph.num_vertices()) {}

  std::size_t size() const { return seq_.size(); }
  const internal::PositionIndex& positions() const { return pos_; }

  void Append(VertexId v) {
    pos_.Append(v);
    seq_.push_back(v);
    Absorb(graph_.edges_ending_at(v));
  }

  void Prepend(VertexId v) {
    pos_.Prepend(v);
    seq_.push_front(v);
    Absorb(graph_.edges_starting_at(v));
  }

  std::size_t MissingCount(const Hyperedge& e) const {
    return static_cast<std::size_t>(
        std::count_if(e.vertices.begin(), e.vertices.end(),
                      [&](VertexId v) { return !pos_.Contains(v); }));
  }

  Sequence Finish() const {
    return Sequence(std::vector<VertexId>(seq_.begin(), seq_.end()));
  }

 private:
  void Absorb(std::span<const EdgeId> ids) {
    for (EdgeId e : ids) {
      if (!state_.Contains(e) && pos_.Induces(graph_.edge(e).vertices)) {
        state_.Add(e);
      }
    }
  }

  const DirectedHypergraph& graph_;
  UtilityState& state_;
  internal::PositionIndex pos_;
  std::deque<VertexId> seq_;
};

void RequireDigraph(const DirectedHypergraph& graph) {
  if (graph.max_edge_size() > 2) {
    throw InputError(
        "sequence-greedy: the graph has an edge with " +
        std::to_string(graph.max_edge_size()) +
        " vertices; use hyper-sequence-greedy for hypergraphs");
  }
}

SolveReport RunGreedy(const DirectedHypergraph& graph,
                      const UtilityFunction& h, const SolveConfig& config,
                      Family family, bool forward) {
  if (config.k < 0) throw ConfigError("solve: k must be non-negative");
  if (h.num_edges() != graph.num_edges()) {
    throw InputError("solve: utility and graph disagree on the edge count");
  }
  if (family == Family::kPairwise) RequireDigraph(graph);

  SolveReport report;
  report.algorithm = family == Family::kPairwise
                         ? Algorithm::kSequenceGreedy
                         : Algorithm::kHyperSequenceGreedy;
  report.direction_used = forward ? Direction::kForward : Direction::kBackward;
  report.tie_break = config.tie_break;
  report.k = config.k;
  report.fill_to_k = config.fill_to_k.value_or(family == Family::kHyper);
  const int r = family == Family::kPairwise ? 2 : graph.max_edge_size();
  report.bound = ApproxBound(config.k, graph.max_in_degree(),
                             graph.max_out_degree(), r,
                             report.direction_used);

  const std::unique_ptr<UtilityState> state = h.NewState();
  SequenceBuilder builder(graph, *state);
  const internal::PositionIndex& pos = builder.positions();

  auto eligible = [&](EdgeId id) {
    const Hyperedge& e = graph.edge(id);
    if (family == Family::kPairwise) {
      return !pos.Contains(forward ? e.last() : e.first());
    }
    if (state->Contains(id)) return false;
    return forward ? pos.PrefixEligible(e.vertices)
                   : pos.SuffixEligible(e.vertices);
  };

  auto take = [&](EdgeId id, double gain, bool fill) {
    const double before = state->value();
    const std::vector<VertexId>& vs = graph.edge(id).vertices;
    if (forward) {
      for (VertexId v : vs) {
        if (!pos.Contains(v)) builder.Append(v);
      }
    } else {
      for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
        if (!pos.Contains(*it)) builder.Prepend(*it);
      }
    }
    report.trace.push_back(
        {id, gain, state->value() - before, builder.size(), fill});
  };

  // Candidate ids stay in ascending order, so a strict comparison keeps the
  // smallest id among maximizers. Ineligibility is permanent in every mode,
  // which lets each scan compact the list in place.
  std::vector<EdgeId> candidates(graph.num_edges());
  std::iota(candidates.begin(), candidates.end(), 0);
  auto scan = [&](std::size_t max_new) {
    EdgeId best = -1;
    double best_gain = -1.0;
    std::size_t kept = 0;
    for (EdgeId id : candidates) {
      if (!eligible(id)) continue;
      candidates[kept++] = id;
      if (builder.MissingCount(graph.edge(id)) > max_new) continue;
      const double gain = state->Gain(id);
      if (gain > best_gain) {
        best = id;
        best_gain = gain;
      }
    }
    candidates.resize(kept);
    return std::pair{best, best_gain};
  };

  const auto k = static_cast<std::size_t>(config.k);
  const auto guard = static_cast<std::size_t>(r);
  while (builder.size() + guard <= k) {
    const auto [best, gain] = scan(graph.num_vertices());
    if (best < 0) break;
    take(best, gain, /*fill=*/false);
  }
  if (report.fill_to_k) {
    while (builder.size() < k) {
      const auto [best, gain] = scan(k - builder.size());
      if (best < 0 || !(gain > 0.0)) break;
      take(best, gain, /*fill=*/true);
    }
  }

  report.sigma = builder.Finish();
  report.objective = h.Value(InducedEdges(graph, report.sigma));
  if (std::abs(report.objective - state->value()) >
      1e-9 * (1.0 + std::abs(report.objective))) {
    throw InvariantError("solve: incremental objective " +
                         std::to_string(state->value()) +
                         " disagrees with h(E(sigma)) = " +
                         std::to_string(report.objective));
  }
  return report;
}

}  // namespace

SolveReport SequenceGreedyForward(const DirectedHypergraph& graph,
                                  const UtilityFunction& h,
                                  const SolveConfig& config) {
  return RunGreedy(graph, h, config, Family::kPairwise, /*forward=*/true);
}

SolveReport SequenceGreedyBackward(const DirectedHypergraph& graph,
                                   const UtilityFunction& h,
                                   const SolveConfig& config) {
  return RunGreedy(graph, h, config, Family::kPairwise, /*forward=*/false);
}

SolveReport HyperSequenceGreedyForward(const DirectedHypergraph& graph,
                                       const UtilityFunction& h,
                                       const SolveConfig& config) {
  return RunGreedy(graph, h, config, Family::kHyper, /*forward=*/true);
}

SolveReport HyperSequenceGreedyBackward(const DirectedHypergraph& graph,
                                        const UtilityFunction& h,
                                        const SolveConfig& config) {
  return RunGreedy(graph, h, config, Family::kHyper, /*forward=*/false);
}

SolveReport PickBetter(SolveReport forward, SolveReport backward) {
  const double bound = std::max(forward.bound, backward.bound);
  SolveReport chosen = backward.objective > forward.objective
                           ? std::move(backward)
                           : std::move(forward);
  chosen.bound = bound;
  return chosen;
}

SolveReport BestOfBoth(const DirectedHypergraph& graph,
                       const UtilityFunction& h, const SolveConfig& config,
                       Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSequenceGreedy:
      return PickBetter(SequenceGreedyForward(graph, h, config),
                        SequenceGreedyBackward(graph, h, config));
    case Algorithm::kHyperSequenceGreedy:
      return PickBetter(HyperSequenceGreedyForward(graph, h, config),
                        HyperSequenceGreedyBackward(graph, h, config));
    case Algorithm::kFrequency:
      break;
  }
  throw ConfigError("best-of-both: frequency has no direction");
}

SolveReport FrequencyBaseline(const DirectedHypergraph& graph,
                              const UtilityFunction& h, int k,
                              const Sequence& history) {
  if (k < 0) throw ConfigError("frequency: k must be non-negative");
  history.ValidateFor(graph.num_vertices());
  const auto n = static_cast<std::size_t>(graph.num_vertices());
  std::vector<double> popularity(n, 0.0);
  for (const Hyperedge& e : graph.edges()) {
    if (e.is_self_loop()) {
      popularity[e.first()] = std::max(popularity[e.first()], e.value);
    }
  }
  std::vector<VertexId> order;
  for (std::size_t v = 0; v < n; ++v) {
    if (!history.Contains(static_cast<VertexId>(v))) {
      order.push_back(static_cast<VertexId>(v));
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return popularity[a] > popularity[b];
  });
  order.resize(std::min(order.size(), static_cast<std::size_t>(k)));

  SolveReport report;
  report.algorithm = Algorithm::kFrequency;
  report.k = k;
  report.sigma = Sequence(std::move(order));
  report.objective = h.Value(InducedEdges(graph, report.sigma));
  return report;
}

SolveReport Solve(const DirectedHypergraph& graph, const UtilityFunction& h,
                  Algorithm algorithm, const SolveConfig& config,
                  const Sequence& history) {
  if (algorithm == Algorithm::kFrequency) {
    return FrequencyBaseline(graph, h, config.k, history);
  }
  if (config.direction == Direction::kBoth) {
    return BestOfBoth(graph, h, config, algorithm);
  }
  const bool forward = config.direction == Direction::kForward;
  if (algorithm == Algorithm::kSequenceGreedy) {
    return forward ? SequenceGreedyForward(graph, h, config)
                   : SequenceGreedyBackward(graph, h, config);
  }
  return forward ? HyperSequenceGreedyForward(graph, h, config)
                 : HyperSequenceGreedyBackward(graph, h, config);
}

}  // namespace seqsub
