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

// Monotone submodular set functions h over edge ids.
//
// Two built-ins are provided:
//   * modular-count: h(S) = sum of per-edge weights. With unit weights this
//     is |S|.
//   * probabilistic-coverage: h(S) = sum over terminal vertices v of
//     1 - prod_{s in S, last(s) = v} (1 - p_s).
//
// Both expose an incremental state (UtilityState) that solvers use to get
// O(1) marginal gains; incremental and from-scratch values agree to 1e-9.

#ifndef SEQSUB_UTILITY_H_
#define SEQSUB_UTILITY_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqsub/hypergraph.h"

namespace seqsub {

enum class UtilityKind { kModularCount, kProbabilisticCoverage };

std::string_view UtilityKindName(UtilityKind kind);
// Accepts the canonical names plus the short aliases "modular"/"coverage".
std::optional<UtilityKind> ParseUtilityKind(std::string_view name);

// Marginals below -kNegativeSlack are reported as an InvariantError; those
// in (-kNegativeSlack, 0) are clamped to zero.
inline constexpr double kNegativeSlack = 1e-12;

// Mutable evaluation state for one solver run: the current edge set and its
// value. Supports checkpoint/rollback for depth-first enumeration.
class UtilityState {
 public:
  virtual ~UtilityState() = default;

  virtual double value() const = 0;
  virtual bool Contains(EdgeId e) const = 0;
  // h(e | S) for the current S; zero when e is already in S.
  virtual double Gain(EdgeId e) const = 0;
  // Adds e (no-op if present) and returns the realized gain.
  virtual double Add(EdgeId e) = 0;

  virtual std::size_t Checkpoint() const = 0;
  // Undoes every Add made after the matching Checkpoint.
  virtual void Rollback(std::size_t checkpoint) = 0;
};

class UtilityFunction {
 public:
  virtual ~UtilityFunction() = default;

  virtual UtilityKind kind() const = 0;
  virtual std::size_t num_edges() const = 0;

  // Throws InputError on an unknown edge id.
  virtual double Value(const EdgeSet& edges) const = 0;
  // Value(S u {e}) - Value(S), clamped as described at kNegativeSlack.
  virtual double Marginal(EdgeId e, const EdgeSet& edges) const;

  virtual std::unique_ptr<UtilityState> NewState() const = 0;

 protected:
  void CheckEdge(EdgeId e) const;
  void CheckEdges(const EdgeSet& edges) const;
};

// h(S) = sum of weights. Weights must be finite and non-negative.
class ModularUtility final : public UtilityFunction {
 public:
  explicit ModularUtility(std::vector<double> weights);

  UtilityKind kind() const override { return UtilityKind::kModularCount; }
  std::size_t num_edges() const override { return weights_.size(); }
  double Value(const EdgeSet& edges) const override;
  double Marginal(EdgeId e, const EdgeSet& edges) const override;
  std::unique_ptr<UtilityState> NewState() const override;

  double weight(EdgeId e) const { return weights_[e]; }

 private:
  std::vector<double> weights_;
};

// Probabilistic coverage over terminal vertices. Products over more than
// kLogSpaceThreshold factors per vertex are accumulated in log space.
class CoverageUtility final : public UtilityFunction {
 public:
  static constexpr std::size_t kLogSpaceThreshold = 64;

  // terminal[e] is the last vertex of edge e; probabilities in [0, 1].
  CoverageUtility(std::int64_t num_vertices, std::vector<VertexId> terminal,
                  std::vector<double> probabilities);

  UtilityKind kind() const override {
    return UtilityKind::kProbabilisticCoverage;
  }
  std::size_t num_edges() const override { return probability_.size(); }
  double Value(const EdgeSet& edges) const override;
  double Marginal(EdgeId e, const EdgeSet& edges) const override;
  std::unique_ptr<UtilityState> NewState() const override;

  std::int64_t num_vertices() const { return num_vertices_; }
  VertexId terminal(EdgeId e) const { return terminal_[e]; }
  double probability(EdgeId e) const { return probability_[e]; }

 private:
  // prod (1 - p_s) over the given factors.
  static double MissProbability(const std::vector<double>& probabilities);

  std::int64_t num_vertices_;
  std::vector<VertexId> terminal_;
  std::vector<double> probability_;
};

// Builds a utility whose parameters are the graph's edge values: weights
// for modular-count, probabilities for coverage.
std::unique_ptr<UtilityFunction> MakeUtility(UtilityKind kind,
                                             const DirectedHypergraph& graph);

}  // namespace seqsub

#endif  // SEQSUB_UTILITY_H_
