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

#include "seqsub/utility.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "seqsub/errors.h"

namespace seqsub {

std::string_view UtilityKindName(UtilityKind kind) {
  switch (kind) {
    case UtilityKind::kModularCount:
      return "modular-count";
    case UtilityKind::kProbabilisticCoverage:
      return "probabilistic-coverage";
  }
  return "unknown";
}

std::optional<UtilityKind> ParseUtilityKind(std::string_view name) {
  if (name == "modular-count" || name == "modular") {
    return UtilityKind::kModularCount;
  }
  if (name == "probabilistic-coverage" || name == "coverage") {
    return UtilityKind::kProbabilisticCoverage;
  }
  return std::nullopt;
}

namespace {

double ClampGain(double gain) {
  if (gain >= 0.0) return gain;
  if (gain > -kNegativeSlack) return 0.0;
  throw InvariantError("utility: marginal gain " + std::to_string(gain) +
                       " is negative; h is not monotone");
}

}  // namespace

void UtilityFunction::CheckEdge(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= num_edges()) {
    throw InputError("utility: unknown edge id " + std::to_string(e));
  }
}

void UtilityFunction::CheckEdges(const EdgeSet& edges) const {
  for (EdgeId e : edges) CheckEdge(e);
}

double UtilityFunction::Marginal(EdgeId e, const EdgeSet& edges) const {
  CheckEdge(e);
  if (edges.Contains(e)) return 0.0;
  EdgeSet bigger = edges;
  bigger.Insert(e);
  return ClampGain(Value(bigger) - Value(edges));
}

// ---------------------------------------------------------------------------
// Modular

namespace {

class ModularState final : public UtilityState {
 public:
  explicit ModularState(const ModularUtility& h)
      : h_(h), selected_(h.num_edges(), 0) {}

  double value() const override { return value_; }
  bool Contains(EdgeId e) const override { return selected_[e] != 0; }
  double Gain(EdgeId e) const override {
    return selected_[e] ? 0.0 : h_.weight(e);
  }
  double Add(EdgeId e) override {
    if (selected_[e]) return 0.0;
    const double gain = h_.weight(e);
    log_.push_back({e, value_});
    selected_[e] = 1;
    value_ += gain;
    return gain;
  }
  std::size_t Checkpoint() const override { return log_.size(); }
  void Rollback(std::size_t checkpoint) override {
    while (log_.size() > checkpoint) {
      selected_[log_.back().edge] = 0;
      value_ = log_.back().value;
      log_.pop_back();
    }
  }

 private:
  struct Undo {
    EdgeId edge;
    double value;
  };
  const ModularUtility& h_;
  std::vector<char> selected_;
  std::vector<Undo> log_;
  double value_ = 0.0;
};

}  // namespace

ModularUtility::ModularUtility(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    if (!std::isfinite(weights_[e]) || weights_[e] < 0.0) {
      throw InputError("modular utility: edge " + std::to_string(e) +
                       " has a negative or non-finite weight");
    }
  }
}

double ModularUtility::Value(const EdgeSet& edges) const {
  CheckEdges(edges);
  double total = 0.0;
  for (EdgeId e : edges) total += weights_[e];
  return total;
}

double ModularUtility::Marginal(EdgeId e, const EdgeSet& edges) const {
  CheckEdge(e);
  CheckEdges(edges);
  return edges.Contains(e) ? 0.0 : weights_[e];
}

std::unique_ptr<UtilityState> ModularUtility::NewState() const {
  return std::make_unique<ModularState>(*this);
}

// ---------------------------------------------------------------------------
// Probabilistic coverage

namespace {

class CoverageState final : public UtilityState {
 public:
  explicit CoverageState(const CoverageUtility& h)
      : h_(h),
        selected_(h.num_edges(), 0),
        miss_(static_cast<std::size_t>(h.num_vertices()), 1.0),
        log_miss_(static_cast<std::size_t>(h.num_vertices()), 0.0),
        count_(static_cast<std::size_t>(h.num_vertices()), 0) {}

  double value() const override { return value_; }
  bool Contains(EdgeId e) const override { return selected_[e] != 0; }
  double Gain(EdgeId e) const override {
    if (selected_[e]) return 0.0;
    return h_.probability(e) * Miss(h_.terminal(e));
  }
  double Add(EdgeId e) override {
    if (selected_[e]) return 0.0;
    const VertexId v = h_.terminal(e);
    const double p = h_.probability(e);
    const double gain = p * Miss(v);
    log_.push_back({e, miss_[v], log_miss_[v], value_});
    selected_[e] = 1;
    miss_[v] *= 1.0 - p;
    log_miss_[v] += std::log1p(-p);
    ++count_[v];
    value_ += gain;
    return gain;
  }
  std::size_t Checkpoint() const override { return log_.size(); }
  void Rollback(std::size_t checkpoint) override {
    while (log_.size() > checkpoint) {
      const Undo& u = log_.back();
      const VertexId v = h_.terminal(u.edge);
      selected_[u.edge] = 0;
      miss_[v] = u.miss;
      log_miss_[v] = u.log_miss;
      --count_[v];
      value_ = u.value;
      log_.pop_back();
    }
  }

 private:
  double Miss(VertexId v) const {
    return count_[v] > CoverageUtility::kLogSpaceThreshold
               ? std::exp(log_miss_[v])
               : miss_[v];
  }

  struct Undo {
    EdgeId edge;
    double miss;
    double log_miss;
    double value;
  };
  const CoverageUtility& h_;
  std::vector<char> selected_;
  std::vector<double> miss_;
  std::vector<double> log_miss_;
  std::vector<std::size_t> count_;
  std::vector<Undo> log_;
  double value_ = 0.0;
};

}  // namespace

CoverageUtility::CoverageUtility(std::int64_t num_vertices,
                                 std::vector<VertexId> terminal,
                                 std::vector<double> probabilities)
    : num_vertices_(num_vertices),
      terminal_(std::move(terminal)),
      probability_(std::move(probabilities)) {
  if (terminal_.size() != probability_.size()) {
    throw InputError("coverage utility: terminal/probability size mismatch");
  }
  for (std::size_t e = 0; e < probability_.size(); ++e) {
    const double p = probability_[e];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InputError("coverage utility: edge " + std::to_string(e) +
                       " has probability outside [0, 1]");
    }
    if (terminal_[e] < 0 || terminal_[e] >= num_vertices_) {
      throw InputError("coverage utility: edge " + std::to_string(e) +
                       " has an out-of-range terminal vertex");
    }
  }
}

double CoverageUtility::MissProbability(
    const std::vector<double>& probabilities) {
  std::vector<double> sorted = probabilities;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() > kLogSpaceThreshold) {
    double log_miss = 0.0;
    for (double p : sorted) log_miss += std::log1p(-p);
    return std::exp(log_miss);
  }
  double miss = 1.0;
  for (double p : sorted) miss *= 1.0 - p;
  return miss;
}

double CoverageUtility::Value(const EdgeSet& edges) const {
  CheckEdges(edges);
  std::map<VertexId, std::vector<double>> by_terminal;
  for (EdgeId e : edges) by_terminal[terminal_[e]].push_back(probability_[e]);
  double total = 0.0;
  for (const auto& [v, probabilities] : by_terminal) {
    total += 1.0 - MissProbability(probabilities);
  }
  return total;
}

// Only the terminal vertex of e changes, so the difference is taken on that
// vertex's term alone.
double CoverageUtility::Marginal(EdgeId e, const EdgeSet& edges) const {
  CheckEdge(e);
  CheckEdges(edges);
  if (edges.Contains(e)) return 0.0;
  const VertexId v = terminal_[e];
  std::vector<double> without;
  for (EdgeId s : edges) {
    if (terminal_[s] == v) without.push_back(probability_[s]);
  }
  std::vector<double> with = without;
  with.push_back(probability_[e]);
  return ClampGain(MissProbability(without) - MissProbability(with));
}

std::unique_ptr<UtilityState> CoverageUtility::NewState() const {
  return std::make_unique<CoverageState>(*this);
}

std::unique_ptr<UtilityFunction> MakeUtility(UtilityKind kind,
                                             const DirectedHypergraph& graph) {
  std::vector<double> values;
  values.reserve(graph.num_edges());
  for (const Hyperedge& e : graph.edges()) values.push_back(e.value);
  if (kind == UtilityKind::kModularCount) {
    return std::make_unique<ModularUtility>(std::move(values));
  }
  std::vector<VertexId> terminal;
  terminal.reserve(graph.num_edges());
  for (const Hyperedge& e : graph.edges()) terminal.push_back(e.last());
  return std::make_unique<CoverageUtility>(
      graph.num_vertices(), std::move(terminal), std::move(values));
}

}  // namespace seqsub
