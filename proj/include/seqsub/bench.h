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

#ifndef SEQSUB_BENCH_H_
#define SEQSUB_BENCH_H_

#include <cstdint>
#include <span>
#include <vector>

namespace seqsub {

struct BenchPoint {
  std::int64_t num_edges = 0;
  double seconds = 0.0;  // median over repetitions
  std::size_t iterations = 0;  // greedy steps in the timed run
};

// Times forward Sequence-Greedy (coverage utility) on random digraphs with
// m edges over max(m / 10, 2k) vertices. Instance generation is untimed
// and may use `workers` threads; timing itself is single-threaded.
std::vector<BenchPoint> BenchmarkSequenceGreedy(
    std::span<const std::int64_t> edge_counts, int k, int repetitions,
    std::uint64_t seed, int workers = 1);

// Least-squares slope of log(seconds) against log(num_edges).
double FitLogLogSlope(std::span<const BenchPoint> points);

}  // namespace seqsub

#endif  // SEQSUB_BENCH_H_
