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

// Directed hypergraphs whose edges are ordered, non-repeating vertex
// sequences. A length-1 edge is a self-loop and a length-2 edge is an
// ordinary arc, so plain digraphs are the r = 2 special case.

#ifndef SEQSUB_HYPERGRAPH_H_
#define SEQSUB_HYPERGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace seqsub {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// An ordered list of distinct vertices. Used both for candidate solutions
// and for user histories.
class Sequence {
 public:
  Sequence() = default;
  // Throws InputError on a repeated or negative vertex.
  explicit Sequence(std::vector<VertexId> vertices);
  Sequence(std::initializer_list<VertexId> vertices)
      : Sequence(std::vector<VertexId>(vertices)) {}

  std::span<const VertexId> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool Contains(VertexId v) const;
  // Throws InputError if any vertex is >= n.
  void ValidateFor(std::int64_t n) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence& a, const Sequence& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  std::vector<VertexId> vertices_;
};

// A set of edge ids, kept sorted and unique.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<EdgeId> ids);
  EdgeSet(std::initializer_list<EdgeId> ids)
      : EdgeSet(std::vector<EdgeId>(ids)) {}

  bool Contains(EdgeId e) const;
  // Returns false if e was already present.
  bool Insert(EdgeId e);

  std::span<const EdgeId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<EdgeId> ids_;
};

struct Hyperedge {
  std::vector<VertexId> vertices;
  // Weight or probability; its meaning is assigned by the utility function.
  double value = 0.0;

  std::size_t size() const { return vertices.size(); }
  VertexId first() const { return vertices.front(); }
  VertexId last() const { return vertices.back(); }
  bool is_self_loop() const { return vertices.size() == 1; }
};

// Per-vertex degrees under the hyperedge rule: a self-loop adds one to both
// tables; any longer edge adds one to d_in(v) unless v is its first vertex
// and one to d_out(v) unless v is its last vertex.
struct DegreeTable {
  std::vector<int> in;
  std::vector<int> out;
  int max_in = 0;
  int max_out = 0;
  int delta = 0;  // min(max_in, max_out)
};

// Immutable after construction; safe to share between concurrent readers.
// Edge ids are positions in the edge list. Duplicate vertex lists are
// allowed and stay distinct edges.
class DirectedHypergraph {
 public:
  DirectedHypergraph() = default;
  // Throws InputError on an empty edge, a repeated vertex within an edge,
  // an out-of-range vertex, or a negative / non-finite value.
  DirectedHypergraph(std::int64_t n, std::vector<Hyperedge> edges);

  std::int64_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Hyperedge> edges() const { return edges_; }
  const Hyperedge& edge(EdgeId e) const { return edges_[e]; }
  bool IsValidEdge(EdgeId e) const {
    return e >= 0 && static_cast<std::size_t>(e) < edges_.size();
  }

  // r: the largest edge cardinality, 0 for an edgeless graph.
  int max_edge_size() const { return max_edge_size_; }
  const DegreeTable& degrees() const { return degrees_; }
  int max_in_degree() const { return degrees_.max_in; }
  int max_out_degree() const { return degrees_.max_out; }
  int delta() const { return degrees_.delta; }

  // Edge ids whose last (resp. first) vertex is v, ascending.
  std::span<const EdgeId> edges_ending_at(VertexId v) const;
  std::span<const EdgeId> edges_starting_at(VertexId v) const;

 private:
  std::int64_t n_ = 0;
  std::vector<Hyperedge> edges_;
  int max_edge_size_ = 0;
  DegreeTable degrees_;
  // CSR-style adjacency by terminal / initial vertex.
  std::vector<std::size_t> end_offsets_;
  std::vector<EdgeId> end_index_;
  std::vector<std::size_t> start_offsets_;
  std::vector<EdgeId> start_index_;
};

// The subsequence of `sigma` made of members of `vertex_set`, in sigma's
// order. `vertex_set` is read as a set; its order and duplicates are
// ignored.
Sequence OrderedIntersection(const Sequence& sigma,
                             std::span<const VertexId> vertex_set);

// E(sigma): edges all of whose vertices occur in sigma in the edge's order.
EdgeSet InducedEdges(const DirectedHypergraph& graph, const Sequence& sigma);

// Edges e such that sigma restricted to V(e) is a (possibly empty, possibly
// complete) prefix of e. Fully induced edges are included.
EdgeSet EligiblePrefixEdges(const DirectedHypergraph& graph,
                            const Sequence& sigma);
// Mirror of EligiblePrefixEdges with a suffix test.
EdgeSet EligibleSuffixEdges(const DirectedHypergraph& graph,
                            const Sequence& sigma);

DegreeTable Degrees(const DirectedHypergraph& graph);

// True if `needle` occurs in `haystack` as an order-preserving (not
// necessarily contiguous) subsequence.
bool IsSubsequence(std::span<const VertexId> needle,
                   std::span<const VertexId> haystack);

}  // namespace seqsub

#endif  // SEQSUB_HYPERGRAPH_H_
