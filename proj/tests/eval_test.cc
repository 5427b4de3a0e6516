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
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "seqsub/errors.h"

namespace seqsub {
namespace {

TEST(OrderedPairsTest, PrintedExample) {
  const std::vector<OrderedPair> expected = {{1, 3}, {1, 2}, {3, 2}};
  EXPECT_EQ(OrderedPairs({1, 3, 2}), expected);
  EXPECT_EQ(OrderedPairs({0, 1, 2, 3, 4}).size(), 10u);
  EXPECT_TRUE(OrderedPairs({}).empty());
}

TEST(TauTest, Examples) {
  const VertexId a = 0, b = 1, c = 2;
  EXPECT_EQ(TauAccuracy({a, b, c}, {a, b, c}), 1.0);
  EXPECT_EQ(TauAccuracy({3, 4, 5}, {a, b, c}), 0.0);
  EXPECT_DOUBLE_EQ(TauAccuracy({a, b, c}, {a, c, b}), 2.0 / 3.0);
  EXPECT_THROW(TauAccuracy({a}, {a}), UndefinedMetricError);
}

TEST(TauTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(4);
  std::vector<VertexId> label(20);
  std::iota(label.begin(), label.end(), 0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<VertexId> pool(20);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::vector<VertexId> p(pool.begin(), pool.begin() + 5);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::vector<VertexId> q(pool.begin(), pool.begin() + 4);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<VertexId> p2, q2;
    for (VertexId v : p) p2.push_back(label[v]);
    for (VertexId v : q) q2.push_back(label[v]);
    const double tau = TauAccuracy(Sequence(p), Sequence(q));
    ASSERT_GE(tau, 0.0);
    ASSERT_LE(tau, 1.0);
    ASSERT_EQ(tau, TauAccuracy(Sequence(p2), Sequence(q2)));
  }
}

UserSequence User(std::string name, std::vector<VertexId> items,
                  std::vector<double> completion = {}) {
  UserSequence u;
  u.user = std::move(name);
  if (completion.empty()) completion.assign(items.size(), 1.0);
  u.items = Sequence(std::move(items));
  u.completion = std::move(completion);
  return u;
}

TEST(CourseValueTest, Formula) {
  const std::vector<UserSequence> users = {User("u", {0, 1, 2, 3})};
  const CourseValueReport r = CourseValue({0, 1, 2, 3}, users, 100);
  EXPECT_EQ(r.num_matching, 1u);
  EXPECT_DOUBLE_EQ(r.value, 1.0 / 101.0);

  EXPECT_EQ(CourseValue({3, 0}, users, 100).value, 0.0);
  EXPECT_EQ(CourseValue({3, 0}, users, 100).num_matching, 0u);
  EXPECT_LT(CourseValue({0, 2}, users, 200).value,
            CourseValue({0, 2}, users, 100).value);
  EXPECT_THROW(CourseValue({}, users, 1), InputError);
}

TEST(CourseValueTest, UsesCompletionOfMatchingUsers) {
  const std::vector<UserSequence> users = {
      User("a", {0, 1, 2}, {0.5, 1.0, 0.2}), User("b", {1, 0}),
      User("c", {0, 3, 1}, {1.0, 1.0, 0.0})};
  const CourseValueReport r = CourseValue({0, 1}, users, 1);
  EXPECT_EQ(r.num_matching, 2u);
  EXPECT_DOUBLE_EQ(r.value, (0.5 + 1.0 + 1.0 + 0.0) / (3.0 * 2.0));
}

std::vector<UserSequence> GlobalOrderCorpus(int users, int items) {
  std::mt19937_64 rng(12);
  std::vector<UserSequence> out;
  for (int u = 0; u < users; ++u) {
    // Each user watches a prefix of one global order, at least 8 long.
    const int length = 8 + static_cast<int>(rng() % (items - 7));
    std::vector<VertexId> seq(static_cast<std::size_t>(length));
    std::iota(seq.begin(), seq.end(), 0);
    out.push_back(User("u" + std::to_string(u), seq));
  }
  return out;
}

TEST(ExperimentTest, GlobalOrderGivesPerfectTau) {
  const std::vector<UserSequence> users = GlobalOrderCorpus(60, 12);
  ExperimentConfig cfg;
  cfg.train.folds = 3;
  cfg.train.max_edge_size = 2;
  cfg.train.min_count = 1;
  cfg.prefix_len = 4;
  cfg.k = 3;
  cfg.algorithms = {DefaultAlgorithms()[0], DefaultAlgorithms()[1]};
  const std::vector<EvalReport> reports = RunExperiment(users, 12, cfg);
  ASSERT_EQ(reports.size(), 6u);
  for (const EvalReport& r : reports) {
    EXPECT_TRUE(r.error.empty()) << r.error;
    EXPECT_EQ(r.train_users + r.test_users, 60u);
    EXPECT_EQ(r.mean_tau, 1.0) << r.algorithm << " fold " << r.fold;
    for (const UserScore& s : r.users) EXPECT_EQ(s.tau, 1.0);
  }
}

TEST(ExperimentTest, DeterministicAndWorkerInvariant) {
  const std::vector<UserSequence> users = GlobalOrderCorpus(40, 14);
  ExperimentConfig cfg;
  cfg.train.folds = 4;
  cfg.train.min_count = 1;
  cfg.prefix_len = 3;
  cfg.k = 4;
  cfg.seed = 99;
  const auto one = RunExperiment(users, 14, cfg);
  cfg.workers = 4;
  const auto four = RunExperiment(users, 14, cfg);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].algorithm, four[i].algorithm);
    EXPECT_EQ(one[i].mean_tau, four[i].mean_tau);
    EXPECT_EQ(one[i].mean_objective, four[i].mean_objective);
    ASSERT_EQ(one[i].users.size(), four[i].users.size());
    for (std::size_t j = 0; j < one[i].users.size(); ++j) {
      EXPECT_EQ(one[i].users[j].user, four[i].users[j].user);
      EXPECT_EQ(one[i].users[j].predicted, four[i].users[j].predicted);
    }
  }
}

TEST(ExperimentTest, TrainingNeverSeesTestUsers) {
  const std::vector<UserSequence> users = GlobalOrderCorpus(30, 10);
  std::int64_t total_events = 0;
  for (const UserSequence& u : users) {
    total_events += static_cast<std::int64_t>(u.items.size());
  }
  ExperimentConfig cfg;
  cfg.train.folds = 3;
  cfg.train.min_count = 1;
  cfg.prefix_len = 3;
  cfg.k = 3;
  for (const EvalReport& r : RunExperiment(users, 10, cfg)) {
    std::int64_t test_events = 0;
    for (const UserScore& s : r.users) {
      for (const UserSequence& u : users) {
        if (u.user == s.user) {
          test_events += static_cast<std::int64_t>(u.items.size());
        }
      }
    }
    EXPECT_LE(r.train_events, total_events - test_events);
  }
}

TEST(ExperimentTest, ShortUsersAreSkipped) {
  std::vector<UserSequence> users = GlobalOrderCorpus(20, 10);
  for (int i = 0; i < 20; ++i) {
    users.push_back(User("short" + std::to_string(i), {0, 1, 2, 3}));
  }
  ExperimentConfig cfg;
  cfg.train.folds = 2;
  cfg.train.min_count = 1;
  cfg.prefix_len = 3;
  cfg.k = 3;
  std::size_t skipped = 0;
  for (const EvalReport& r : RunExperiment(users, 10, cfg)) {
    skipped += r.users_skipped;
  }
  // Each short user is skipped once per algorithm.
  EXPECT_EQ(skipped, 20u * cfg.algorithms.size());
}

TEST(SummaryTest, CsvShapes) {
  EvalReport r;
  r.fold = 0;
  r.algorithm = "frequency";
  r.k = 3;
  r.users.push_back({"u", 0.5, 1.25, {0, 1}, {1, 0}});
  r.mean_tau = 0.5;
  r.mean_objective = 1.25;
  const std::vector<EvalReport> reports = {r};
  std::ostringstream eval_csv;
  WriteEvalCsv(eval_csv, reports);
  EXPECT_EQ(eval_csv.str().substr(0, eval_csv.str().find('\n')),
            "fold,algorithm,k,user,tau,objective");
  const std::vector<PlotPoint> points = Summarize(reports);
  ASSERT_EQ(points.size(), 1u);
  EXPECT_EQ(points[0].mean_tau, 0.5);
  std::ostringstream plot;
  WritePlotCsv(plot, points);
  EXPECT_NE(plot.str().find("3,frequency,0.5"), std::string::npos);
}

}  // namespace
}  // namespace seqsub
