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

// Random instances for property checks, oracle batches and benchmarks.

#ifndef SEQSUB_RANDOM_INSTANCES_H_
#define SEQSUB_RANDOM_INSTANCES_H_

#include <memory>
#include <random>

#include "seqsub/hypergraph.h"
#include "seqsub/utility.h"

namespace seqsub {

struct RandomInstanceOptions {
  int num_vertices = 6;
  int num_edges = 10;
  // Edge sizes are uniform in [1, max_edge_size]; when possible the first
  // edge has exactly max_edge_size vertices so r is pinned.
  int max_edge_size = 2;
  UtilityKind utility = UtilityKind::kModularCount;
};

struct RandomInstance {
  DirectedHypergraph graph;
  std::unique_ptr<UtilityFunction> h;
};

// Modular weights are uniform in [0.1, 10); coverage probabilities are
// uniform in [0.05, 1).
RandomInstance MakeRandomInstance(std::mt19937_64& rng,
                                  const RandomInstanceOptions& options);

}  // namespace seqsub

#endif  // SEQSUB_RANDOM_INSTANCES_H_
