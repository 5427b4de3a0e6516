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

#include "seqsub/eval.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "seqsub/errors.h"
#include "seqsub/utility.h"

namespace seqsub {

std::vector<OrderedPair> OrderedPairs(const Sequence& sigma) {
  std::vector<OrderedPair> pairs;
  pairs.reserve(sigma.size() * (sigma.size() - (sigma.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      pairs.emplace_back(sigma[i], sigma[j]);
    }
  }
  return pairs;
}

double TauAccuracy(const Sequence& predicted, const Sequence& actual) {
  if (actual.size() < 2) {
    throw UndefinedMetricError("tau: the true sequence needs at least two "
                               "items, got " +
                               std::to_string(actual.size()));
  }
  std::unordered_map<VertexId, std::size_t> where;
  for (std::size_t i = 0; i < predicted.size(); ++i) where[predicted[i]] = i;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    auto a = where.find(actual[i]);
    if (a == where.end()) continue;
    for (std::size_t j = i + 1; j < actual.size(); ++j) {
      auto b = where.find(actual[j]);
      if (b != where.end() && a->second < b->second) ++hits;
    }
  }
  const double total = actual.size() * (actual.size() - 1) / 2.0;
  return static_cast<double>(hits) / total;
}

CourseValueReport CourseValue(const Sequence& sigma,
                              std::span<const UserSequence> test_users,
                              double d) {
  if (sigma.empty()) throw InputError("course value: sigma is empty");
  if (!(d >= 0.0)) throw ConfigError("course value: d must be non-negative");
  CourseValueReport report;
  report.sigma = sigma;
  double total = 0.0;
  for (const UserSequence& user : test_users) {
    if (!IsSubsequence(sigma.vertices(), user.items.vertices())) continue;
    ++report.num_matching;
    for (VertexId course : sigma) {
      const auto it =
          std::find(user.items.begin(), user.items.end(), course);
      total += user.completion[static_cast<std::size_t>(
          it - user.items.begin())];
    }
  }
  if (report.num_matching == 0) return report;
  report.value = total / ((static_cast<double>(report.num_matching) + d) *
                          static_cast<double>(sigma.size()));
  return report;
}

std::vector<AlgorithmSpec> DefaultAlgorithms() {
  return {
      {"sequence-greedy", Algorithm::kSequenceGreedy, Direction::kForward,
       true, 2},
      {"hyper-sequence-greedy", Algorithm::kHyperSequenceGreedy,
       Direction::kForward, true, 0},
      {"frequency", Algorithm::kFrequency, Direction::kForward, std::nullopt,
       0},
  };
}

namespace {

struct UserOutcome {
  bool skipped = false;
  std::vector<UserScore> per_algorithm;
};

using ModelsBySize = std::map<int, ConditionalModel>;

int EdgeSizeFor(const AlgorithmSpec& spec, const ExperimentConfig& config) {
  return spec.max_edge_size > 0
             ? std::min(spec.max_edge_size, config.train.max_edge_size)
             : config.train.max_edge_size;
}

UserOutcome EvaluateUser(const UserSequence& user, const ModelsBySize& models,
                         const ExperimentConfig& config) {
  UserOutcome outcome;
  const auto items = user.items.vertices();
  const auto prefix = static_cast<std::size_t>(config.prefix_len);
  if (items.size() < prefix + 2) {
    outcome.skipped = true;
    return outcome;
  }
  const Sequence history(
      std::vector<VertexId>(items.begin(), items.begin() + prefix));
  const std::size_t target_len =
      std::min(items.size() - prefix, static_cast<std::size_t>(config.k));
  const Sequence actual(std::vector<VertexId>(
      items.begin() + prefix, items.begin() + prefix + target_len));
  if (actual.size() < 2) {
    outcome.skipped = true;
    return outcome;
  }

  struct Personalized {
    const ConditionalModel* model = nullptr;
    DirectedHypergraph conditioned;
    std::unique_ptr<UtilityFunction> h;
  };
  std::map<int, Personalized> by_edge_size;
  auto personalized = [&](int max_edge_size) -> const Personalized& {
    auto it = by_edge_size.find(max_edge_size);
    if (it != by_edge_size.end()) return it->second;
    Personalized p;
    p.model = &models.at(max_edge_size);
    p.conditioned = p.model->Conditioned(history);
    p.h = MakeUtility(UtilityKind::kProbabilisticCoverage, p.conditioned);
    return by_edge_size.emplace(max_edge_size, std::move(p)).first->second;
  };

  for (const AlgorithmSpec& spec : config.algorithms) {
    const Personalized& p = personalized(EdgeSizeFor(spec, config));
    SolveConfig solve;
    solve.k = config.k;
    solve.direction = spec.direction;
    solve.fill_to_k = spec.fill_to_k;
    UserScore score;
    score.user = user.user;
    score.actual = actual;
    if (spec.algorithm == Algorithm::kFrequency) {
      // Popularity comes from the unconditioned self-loops; the objective is
      // scored on the same conditioned graph the greedy solvers see.
      const DirectedHypergraph& base = p.model->base();
      const SolveReport report = FrequencyBaseline(
          base, *MakeUtility(UtilityKind::kProbabilisticCoverage, base),
          config.k, history);
      score.predicted = report.sigma;
      score.objective = p.h->Value(InducedEdges(p.conditioned, report.sigma));
    } else {
      const SolveReport report =
          Solve(p.conditioned, *p.h, spec.algorithm, solve, history);
      score.predicted = report.sigma;
      score.objective = report.objective;
    }
    score.tau = TauAccuracy(score.predicted, actual);
    outcome.per_algorithm.push_back(std::move(score));
  }
  return outcome;
}

}  // namespace

std::vector<EvalReport> RunExperiment(std::span<const UserSequence> users,
                                      std::int64_t num_items,
                                      const ExperimentConfig& config) {
  config.train.Validate();
  if (config.k < 0) throw ConfigError("experiment: k must be non-negative");
  if (config.prefix_len < 0) {
    throw ConfigError("experiment: prefix_len must be non-negative");
  }
  if (config.workers < 1) throw ConfigError("experiment: workers must be >= 1");
  if (config.algorithms.empty()) {
    throw ConfigError("experiment: no algorithms selected");
  }
  const std::vector<Fold> folds =
      SplitFolds(users.size(), config.train, config.seed);

  std::vector<EvalReport> reports;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    const Fold& fold = folds[f];
    std::vector<EvalReport> fold_reports(config.algorithms.size());
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      EvalReport& r = fold_reports[a];
      r.fold = static_cast<int>(f);
      r.algorithm = config.algorithms[a].name;
      r.k = config.k;
      r.train_users = fold.train.size();
      r.test_users = fold.test.size();
    }
    try {
      std::vector<Sequence> train;
      std::int64_t train_events = 0;
      train.reserve(fold.train.size());
      for (std::size_t u : fold.train) {
        train.push_back(users[u].items);
        train_events += static_cast<std::int64_t>(users[u].items.size());
      }
      const SubsequenceCounts counts =
          CountSubsequences(train, config.train.max_edge_size);
      ModelsBySize models;
      for (const AlgorithmSpec& spec : config.algorithms) {
        const int size = EdgeSizeFor(spec, config);
        if (models.contains(size)) continue;
        TrainConfig train_cfg = config.train;
        train_cfg.max_edge_size = size;
        models.emplace(size, ConditionalModel(counts, num_items, train_cfg));
      }

      std::vector<UserOutcome> outcomes(fold.test.size());
      std::atomic<std::size_t> next{0};
      std::vector<std::exception_ptr> failures(fold.test.size());
      auto work = [&] {
        for (std::size_t i = next++; i < fold.test.size(); i = next++) {
          try {
            outcomes[i] =
                EvaluateUser(users[fold.test[i]], models, config);
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      };
      const auto workers = std::min<std::size_t>(
          static_cast<std::size_t>(config.workers),
          std::max<std::size_t>(fold.test.size(), 1));
      std::vector<std::jthread> pool;
      for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
      work();
      pool.clear();
      for (const std::exception_ptr& e : failures) {
        if (e) std::rethrow_exception(e);
      }

      for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        EvalReport& r = fold_reports[a];
        r.train_events = train_events;
        double tau_sum = 0.0, obj_sum = 0.0;
        for (UserOutcome& o : outcomes) {
          if (o.skipped) {
            ++r.users_skipped;
            continue;
          }
          tau_sum += o.per_algorithm[a].tau;
          obj_sum += o.per_algorithm[a].objective;
          r.users.push_back(std::move(o.per_algorithm[a]));
        }
        if (!r.users.empty()) {
          r.mean_tau = tau_sum / static_cast<double>(r.users.size());
          r.mean_objective = obj_sum / static_cast<double>(r.users.size());
        }
      }
    } catch (const std::exception& e) {
      for (EvalReport& r : fold_reports) {
        r.users.clear();
        r.error = e.what();
      }
    }
    for (EvalReport& r : fold_reports) reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<EvalReport> RunExperiment(const InteractionLog& log,
                                      const ExperimentConfig& config) {
  const std::vector<UserSequence> users =
      ExtractUserSequences(log, config.train);
  return RunExperiment(users, static_cast<std::int64_t>(log.items.size()),
                       config);
}

std::vector<PlotPoint> Summarize(std::span<const EvalReport> reports) {
  std::map<std::pair<int, std::string>, PlotPoint> acc;
  for (const EvalReport& r : reports) {
    if (!r.error.empty()) continue;
    PlotPoint& p = acc[{r.k, r.algorithm}];
    p.k = r.k;
    p.algorithm = r.algorithm;
    for (const UserScore& u : r.users) {
      p.mean_tau += u.tau;
      p.mean_objective += u.objective;
    }
    p.users += r.users.size();
  }
  std::vector<PlotPoint> out;
  for (auto& [key, p] : acc) {
    if (p.users > 0) {
      p.mean_tau /= static_cast<double>(p.users);
      p.mean_objective /= static_cast<double>(p.users);
    }
    out.push_back(std::move(p));
  }
  return out;
}

void WriteEvalCsv(std::ostream& out, std::span<const EvalReport> reports) {
  const auto old_precision = out.precision(17);
  out << "fold,algorithm,k,user,tau,objective\n";
  for (const EvalReport& r : reports) {
    for (const UserScore& u : r.users) {
      out << r.fold << ',' << r.algorithm << ',' << r.k << ',' << u.user << ','
          << u.tau << ',' << u.objective << '\n';
    }
  }
  out.precision(old_precision);
}

void WritePlotCsv(std::ostream& out, std::span<const PlotPoint> points) {
  const auto old_precision = out.precision(17);
  out << "k,algorithm,mean_tau,mean_objective,users\n";
  for (const PlotPoint& p : points) {
    out << p.k << ',' << p.algorithm << ',' << p.mean_tau << ','
        << p.mean_objective << ',' << p.users << '\n';
  }
  out.precision(old_precision);
}

}  // namespace seqsub
