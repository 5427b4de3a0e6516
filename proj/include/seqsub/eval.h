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

// Prediction metrics and the cross-validated recommendation experiment.

#ifndef SEQSUB_EVAL_H_
#define SEQSUB_EVAL_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqsub/hypergraph.h"
#include "seqsub/ingest.h"
#include "seqsub/solvers.h"

namespace seqsub {

using OrderedPair = std::pair<VertexId, VertexId>;

// T(sigma): all (sigma_i, sigma_j) with i < j, in lexicographic index order.
std::vector<OrderedPair> OrderedPairs(const Sequence& sigma);

// |T(predicted) n T(actual)| / |T(actual)|. Throws UndefinedMetricError when
// |actual| < 2.
double TauAccuracy(const Sequence& predicted, const Sequence& actual);

struct CourseValueReport {
  double value = 0.0;
  std::size_t num_matching = 0;  // |S_sigma|
  Sequence sigma;
};

// Value of a course sequence on held-out users: the users that started all
// of sigma in order contribute their completion fractions,
//   sum_i sum_j c_ij / ((|S_sigma| + d) |sigma|).
// Throws InputError for an empty sigma.
CourseValueReport CourseValue(const Sequence& sigma,
                              std::span<const UserSequence> test_users,
                              double d);

struct AlgorithmSpec {
  std::string name;
  Algorithm algorithm = Algorithm::kHyperSequenceGreedy;
  Direction direction = Direction::kForward;
  std::optional<bool> fill_to_k = true;
  int max_edge_size = 0;  // 0 = the training max_edge_size
};

// Sequence-Greedy on the pairwise model, Hyper Sequence-Greedy on the full
// model, and Frequency; all forward with fill-to-k.
std::vector<AlgorithmSpec> DefaultAlgorithms();

struct ExperimentConfig {
  TrainConfig train;
  int k = 5;
  int prefix_len = 8;
  std::uint64_t seed = 0;
  int workers = 1;
  std::vector<AlgorithmSpec> algorithms = DefaultAlgorithms();
};

struct UserScore {
  std::string user;
  double tau = 0.0;
  double objective = 0.0;
  Sequence predicted;
  Sequence actual;
};

struct EvalReport {
  int fold = 0;
  std::string algorithm;
  int k = 0;
  std::vector<UserScore> users;
  double mean_tau = 0.0;
  double mean_objective = 0.0;
  std::size_t users_skipped = 0;  // fewer than two items after the prefix
  std::size_t train_users = 0;
  std::size_t test_users = 0;
  std::int64_t train_events = 0;
  std::string error;  // set when the fold failed
};

// For every fold: counts on the training users only; for every test user,
// the first prefix_len items form the history and the next k items are the
// target. Each algorithm runs on the history-conditioned model. Reports are
// ordered by (fold, algorithm); results do not depend on `workers`.
std::vector<EvalReport> RunExperiment(std::span<const UserSequence> users,
                                      std::int64_t num_items,
                                      const ExperimentConfig& config);
std::vector<EvalReport> RunExperiment(const InteractionLog& log,
                                      const ExperimentConfig& config);

// Mean tau per (k, algorithm) pooled over folds, weighted by user count.
struct PlotPoint {
  int k = 0;
  std::string algorithm;
  double mean_tau = 0.0;
  double mean_objective = 0.0;
  std::size_t users = 0;
};
std::vector<PlotPoint> Summarize(std::span<const EvalReport> reports);

void WriteEvalCsv(std::ostream& out, std::span<const EvalReport> reports);
void WritePlotCsv(std::ostream& out, std::span<const PlotPoint> points);

}  // namespace seqsub

#endif  // SEQSUB_EVAL_H_
