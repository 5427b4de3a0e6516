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

#include "seqsub/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "seqsub/errors.h"
#include "seqsub/random_instances.h"
#include "seqsub/solvers.h"

namespace seqsub {

std::vector<BenchPoint> BenchmarkSequenceGreedy(
    std::span<const std::int64_t> edge_counts, int k, int repetitions,
    std::uint64_t seed, int workers) {
  if (k < 1 || repetitions < 1 || workers < 1) {
    throw ConfigError("bench: k, repetitions and workers must be positive");
  }
  std::vector<RandomInstance> instances(edge_counts.size());
  auto build = [&](std::size_t i) {
    std::mt19937_64 rng(seed + i);
    RandomInstanceOptions options;
    options.num_edges = static_cast<int>(edge_counts[i]);
    options.num_vertices =
        static_cast<int>(std::max<std::int64_t>(edge_counts[i] / 10, 2 * k));
    options.max_edge_size = 2;
    options.utility = UtilityKind::kProbabilisticCoverage;
    instances[i] = MakeRandomInstance(rng, options);
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < instances.size(); i += workers) build(i);
      });
    }
  }

  SolveConfig config;
  config.k = k;
  config.fill_to_k = false;
  std::vector<BenchPoint> points;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const RandomInstance& inst = instances[i];
    std::vector<double> times;
    std::size_t iterations = 0;
    for (int rep = 0; rep < repetitions; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const SolveReport report =
          SequenceGreedyForward(inst.graph, *inst.h, config);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double>(stop - start).count());
      iterations = report.trace.size();
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2,
                     times.end());
    points.push_back({edge_counts[i], times[times.size() / 2], iterations});
  }
  return points;
}

double FitLogLogSlope(std::span<const BenchPoint> points) {
  if (points.size() < 2) throw ConfigError("fit: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchPoint& p : points) {
    const double x = std::log(static_cast<double>(p.num_edges));
    const double y = std::log(std::max(p.seconds, 1e-12));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace seqsub
