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

#include "seqsub/oracle.h"

#include <algorithm>
#include <limits>
#include <string>

#include "seqsub/errors.h"
#include "seqsub/internal/positions.h"

namespace seqsub {

std::uint64_t CountSequences(std::int64_t n, int k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (n < 0 || k < 0) return 0;
  const std::int64_t depth = std::min<std::int64_t>(n, k);
  std::uint64_t total = 1;
  std::uint64_t level = 1;
  for (std::int64_t j = 1; j <= depth; ++j) {
    const auto factor = static_cast<std::uint64_t>(n - j + 1);
    if (level > kMax / factor) return kMax;
    level *= factor;
    if (total > kMax - level) return kMax;
    total += level;
  }
  return total;
}

namespace {

class Enumerator {
 public:
  Enumerator(const DirectedHypergraph& graph, const UtilityFunction& h,
             std::size_t depth)
      : graph_(graph),
        state_(h.NewState()),
        pos_(graph.num_vertices()),
        used_(static_cast<std::size_t>(graph.num_vertices()), 0),
        depth_(depth) {}

  OracleResult Run() {
    Visit();
    result_.sigma_star = Sequence(best_);
    return result_;
  }

 private:
  // Children are visited in increasing vertex order after their parent, so
  // the first maximizer met is the lexicographically smallest.
  void Visit() {
    ++result_.sequences_examined;
    if (result_.sequences_examined == 1 ||
        state_->value() > result_.opt_value) {
      result_.opt_value = state_->value();
      best_ = current_;
    }
    if (current_.size() == depth_) return;
    for (VertexId v = 0; v < graph_.num_vertices(); ++v) {
      if (used_[v]) continue;
      const std::size_t mark = state_->Checkpoint();
      used_[v] = 1;
      pos_.SetKey(v, static_cast<std::int64_t>(current_.size()));
      current_.push_back(v);
      for (EdgeId e : graph_.edges_ending_at(v)) {
        if (pos_.Induces(graph_.edge(e).vertices)) state_->Add(e);
      }
      Visit();
      current_.pop_back();
      pos_.Erase(v);
      used_[v] = 0;
      state_->Rollback(mark);
    }
  }

  const DirectedHypergraph& graph_;
  std::unique_ptr<UtilityState> state_;
  internal::PositionIndex pos_;
  std::vector<char> used_;
  std::size_t depth_;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
  OracleResult result_;
};

}  // namespace

OracleResult BruteForceOpt(const DirectedHypergraph& graph,
                           const UtilityFunction& h, int k,
                           std::uint64_t cap) {
  if (k < 0) throw ConfigError("oracle: k must be non-negative");
  if (h.num_edges() != graph.num_edges()) {
    throw InputError("oracle: utility and graph disagree on the edge count");
  }
  const std::uint64_t count = CountSequences(graph.num_vertices(), k);
  if (count > cap) {
    throw SizeError("oracle: " + std::to_string(count) +
                    " sequences exceed the enumeration cap of " +
                    std::to_string(cap));
  }
  const auto depth = static_cast<std::size_t>(
      std::min<std::int64_t>(graph.num_vertices(), k));
  OracleResult result = Enumerator(graph, h, depth).Run();
  result.opt_value = h.Value(InducedEdges(graph, result.sigma_star));
  return result;
}

RatioVerdict VerifyRatio(const DirectedHypergraph& graph,
                         const UtilityFunction& h, int k,
                         const SolveReport& report, std::uint64_t cap) {
  const OracleResult opt = BruteForceOpt(graph, h, k, cap);
  RatioVerdict verdict;
  verdict.bound = report.bound;
  verdict.opt_value = opt.opt_value;
  if (opt.opt_value <= 0.0) return verdict;
  verdict.ratio = report.objective / std::max(opt.opt_value, 1e-300);
  verdict.holds = verdict.ratio >= verdict.bound - 1e-9;
  return verdict;
}

}  // namespace seqsub
