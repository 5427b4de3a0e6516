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

#include "seqsub/random_instances.h"

#include <algorithm>
#include <numeric>

#include "seqsub/errors.h"

namespace seqsub {

RandomInstance MakeRandomInstance(std::mt19937_64& rng,
                                  const RandomInstanceOptions& options) {
  if (options.num_vertices < 0 || options.num_edges < 0 ||
      options.max_edge_size < 1) {
    throw ConfigError("random instance: bad options");
  }
  const int r = std::min(options.max_edge_size, options.num_vertices);
  std::uniform_int_distribution<int> size_dist(1, std::max(r, 1));
  std::uniform_real_distribution<double> value_dist =
      options.utility == UtilityKind::kModularCount
          ? std::uniform_real_distribution<double>(0.1, 10.0)
          : std::uniform_real_distribution<double>(0.05, 1.0);

  std::vector<VertexId> pool(static_cast<std::size_t>(options.num_vertices));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Hyperedge> edges;
  if (options.num_vertices > 0) {
    for (int i = 0; i < options.num_edges; ++i) {
      const int size = i == 0 ? r : size_dist(rng);
      // Partial Fisher-Yates: the first `size` slots become the edge.
      for (int j = 0; j < size; ++j) {
        std::uniform_int_distribution<int> pick(j, options.num_vertices - 1);
        std::swap(pool[j], pool[pick(rng)]);
      }
      edges.push_back(
          {std::vector<VertexId>(pool.begin(), pool.begin() + size),
           value_dist(rng)});
    }
  }
  RandomInstance out;
  out.graph = DirectedHypergraph(options.num_vertices, std::move(edges));
  out.h = MakeUtility(options.utility, out.graph);
  return out;
}

}  // namespace seqsub
