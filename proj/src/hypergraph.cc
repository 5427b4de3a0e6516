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

#include "seqsub/hypergraph.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "seqsub/errors.h"
#include "seqsub/internal/positions.h"

namespace seqsub {

Sequence::Sequence(std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  std::unordered_set<VertexId> seen;
  seen.reserve(vertices_.size());
  for (VertexId v : vertices_) {
    if (v < 0) {
      throw InputError("sequence: negative vertex id " + std::to_string(v));
    }
    if (!seen.insert(v).second) {
      throw InputError("sequence: vertex " + std::to_string(v) +
                       " appears more than once");
    }
  }
}

bool Sequence::Contains(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

void Sequence::ValidateFor(std::int64_t n) const {
  for (VertexId v : vertices_) {
    if (v >= n) {
      throw InputError("sequence: vertex " + std::to_string(v) +
                       " out of range for n=" + std::to_string(n));
    }
  }
}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::Contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

bool EdgeSet::Insert(EdgeId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it != ids_.end() && *it == e) return false;
  ids_.insert(it, e);
  return true;
}

namespace {

void BuildIndex(std::int64_t n, const std::vector<Hyperedge>& edges,
                bool by_last, std::vector<std::size_t>& offsets,
                std::vector<EdgeId>& index) {
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Hyperedge& e : edges) {
    ++offsets[(by_last ? e.last() : e.first()) + 1];
  }
  for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v) {
    offsets[v + 1] += offsets[v];
  }
  index.resize(edges.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const Hyperedge& e = edges[id];
    index[fill[by_last ? e.last() : e.first()]++] = static_cast<EdgeId>(id);
  }
}

}  // namespace

DirectedHypergraph::DirectedHypergraph(std::int64_t n,
                                       std::vector<Hyperedge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw InputError("hypergraph: negative vertex count");
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Hyperedge& e = edges_[id];
    const std::string where = "hypergraph: edge " + std::to_string(id);
    if (e.vertices.empty()) throw InputError(where + " is empty");
    if (!std::isfinite(e.value) || e.value < 0.0) {
      throw InputError(where + " has a negative or non-finite value");
    }
    for (VertexId v : e.vertices) {
      if (v < 0 || v >= n_) {
        throw InputError(where + " references vertex " + std::to_string(v) +
                         " outside [0, " + std::to_string(n_) + ")");
      }
      if (seen[v]) throw InputError(where + " repeats vertex " +
                                    std::to_string(v));
      seen[v] = 1;
    }
    for (VertexId v : e.vertices) seen[v] = 0;
    max_edge_size_ = std::max(max_edge_size_, static_cast<int>(e.size()));
  }
  BuildIndex(n_, edges_, /*by_last=*/true, end_offsets_, end_index_);
  BuildIndex(n_, edges_, /*by_last=*/false, start_offsets_, start_index_);

  degrees_.in.assign(static_cast<std::size_t>(n_), 0);
  degrees_.out.assign(static_cast<std::size_t>(n_), 0);
  for (const Hyperedge& e : edges_) {
    if (e.is_self_loop()) {
      ++degrees_.in[e.first()];
      ++degrees_.out[e.first()];
      continue;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != 0) ++degrees_.in[e.vertices[i]];
      if (i + 1 != e.size()) ++degrees_.out[e.vertices[i]];
    }
  }
  for (std::size_t v = 0; v < degrees_.in.size(); ++v) {
    degrees_.max_in = std::max(degrees_.max_in, degrees_.in[v]);
    degrees_.max_out = std::max(degrees_.max_out, degrees_.out[v]);
  }
  degrees_.delta = std::min(degrees_.max_in, degrees_.max_out);
}

std::span<const EdgeId> DirectedHypergraph::edges_ending_at(VertexId v) const {
  return std::span<const EdgeId>(end_index_)
      .subspan(end_offsets_[v], end_offsets_[v + 1] - end_offsets_[v]);
}

std::span<const EdgeId> DirectedHypergraph::edges_starting_at(
    VertexId v) const {
  return std::span<const EdgeId>(start_index_)
      .subspan(start_offsets_[v], start_offsets_[v + 1] - start_offsets_[v]);
}

Sequence OrderedIntersection(const Sequence& sigma,
                             std::span<const VertexId> vertex_set) {
  std::unordered_set<VertexId> members(vertex_set.begin(), vertex_set.end());
  std::vector<VertexId> out;
  for (VertexId v : sigma) {
    if (members.contains(v)) out.push_back(v);
  }
  return Sequence(std::move(out));
}

namespace {

internal::PositionIndex IndexOf(const DirectedHypergraph& graph,
                                const Sequence& sigma) {
  sigma.ValidateFor(graph.num_vertices());
  internal::PositionIndex pos(graph.num_vertices());
  for (VertexId v : sigma) pos.Append(v);
  return pos;
}

template <typename Pred>
EdgeSet CollectEdges(const DirectedHypergraph& graph, Pred pred) {
  std::vector<EdgeId> ids;
  for (std::size_t id = 0; id < graph.num_edges(); ++id) {
    if (pred(graph.edge(static_cast<EdgeId>(id)).vertices)) {
      ids.push_back(static_cast<EdgeId>(id));
    }
  }
  return EdgeSet(std::move(ids));
}

}  // namespace

EdgeSet InducedEdges(const DirectedHypergraph& graph, const Sequence& sigma) {
  const internal::PositionIndex pos = IndexOf(graph, sigma);
  return CollectEdges(graph, [&](const std::vector<VertexId>& e) {
    return pos.Induces(e);
  });
}

EdgeSet EligiblePrefixEdges(const DirectedHypergraph& graph,
                            const Sequence& sigma) {
  const internal::PositionIndex pos = IndexOf(graph, sigma);
  return CollectEdges(graph, [&](const std::vector<VertexId>& e) {
    return pos.PrefixEligible(e);
  });
}

EdgeSet EligibleSuffixEdges(const DirectedHypergraph& graph,
                            const Sequence& sigma) {
  const internal::PositionIndex pos = IndexOf(graph, sigma);
  return CollectEdges(graph, [&](const std::vector<VertexId>& e) {
    return pos.SuffixEligible(e);
  });
}

DegreeTable Degrees(const DirectedHypergraph& graph) {
  return graph.degrees();
}

bool IsSubsequence(std::span<const VertexId> needle,
                   std::span<const VertexId> haystack) {
  std::size_t i = 0;
  for (VertexId v : haystack) {
    if (i == needle.size()) break;
    if (v == needle[i]) ++i;
  }
  return i == needle.size();
}

}  // namespace seqsub
