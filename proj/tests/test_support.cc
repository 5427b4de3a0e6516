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

#include "test_support.h"

#include <algorithm>
#include <numeric>

namespace seqsub {

void PrintTo(const Sequence& sigma, std::ostream* os) {
  *os << '(';
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    *os << (i ? "," : "") << sigma[i];
  }
  *os << ')';
}

void PrintTo(const EdgeSet& edges, std::ostream* os) {
  *os << '{';
  for (std::size_t i = 0; i < edges.size(); ++i) {
    *os << (i ? "," : "") << edges.ids()[i];
  }
  *os << '}';
}

}  // namespace seqsub

namespace seqsub::testing {

DirectedHypergraph LotrGraph() {
  return DirectedHypergraph(
      3, {{{kF, kT}, 1.0}, {{kT, kR}, 1.0}, {{kF, kR}, 1.0},
          {{kF}, 1.0}, {{kT}, 1.0}, {{kR}, 1.0}});
}

namespace {

int PositionOf(const std::vector<VertexId>& sigma, VertexId v) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] == v) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::vector<EdgeId> NaiveInducedEdges(const DirectedHypergraph& graph,
                                      const std::vector<VertexId>& sigma) {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const auto& vs = graph.edge(static_cast<EdgeId>(e)).vertices;
    int last = -1;
    bool ok = true;
    for (VertexId v : vs) {
      const int p = PositionOf(sigma, v);
      if (p <= last) {
        ok = false;
        break;
      }
      last = p;
    }
    if (ok) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

std::vector<EdgeId> PairwiseInducedEdges(const DirectedHypergraph& graph,
                                         const std::vector<VertexId>& sigma) {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const auto& vs = graph.edge(static_cast<EdgeId>(e)).vertices;
    const VertexId a = vs.front();
    const VertexId b = vs.back();
    bool hit = false;
    for (std::size_t i = 0; i < sigma.size() && !hit; ++i) {
      for (std::size_t j = i; j < sigma.size() && !hit; ++j) {
        hit = sigma[i] == a && sigma[j] == b;
      }
    }
    if (hit) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

void ForEachSequence(
    int n, int k, const std::function<void(const std::vector<VertexId>&)>& fn) {
  std::vector<VertexId> sigma;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void()> rec = [&] {
    fn(sigma);
    if (static_cast<int>(sigma.size()) == k) return;
    for (VertexId v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      sigma.push_back(v);
      rec();
      sigma.pop_back();
      used[v] = 0;
    }
  };
  rec();
}

double NaiveObjective(const DirectedHypergraph& graph,
                      const UtilityFunction& h,
                      const std::vector<VertexId>& sigma) {
  return h.Value(EdgeSet(NaiveInducedEdges(graph, sigma)));
}

double NaiveOptimum(const DirectedHypergraph& graph, const UtilityFunction& h,
                    int k) {
  double best = 0.0;
  ForEachSequence(static_cast<int>(graph.num_vertices()), k,
                  [&](const std::vector<VertexId>& sigma) {
                    best = std::max(best, NaiveObjective(graph, h, sigma));
                  });
  return best;
}

bool NaiveIsSubsequence(const std::vector<VertexId>& needle,
                        const std::vector<VertexId>& haystack) {
  std::size_t i = 0;
  for (VertexId v : haystack) {
    if (i < needle.size() && needle[i] == v) ++i;
  }
  return i == needle.size();
}

std::int64_t NaiveCount(const std::vector<std::vector<VertexId>>& users,
                        const std::vector<VertexId>& s) {
  std::int64_t n = 0;
  for (const auto& u : users) {
    if (NaiveIsSubsequence(s, u)) ++n;
  }
  return n;
}

std::map<std::vector<VertexId>, double> NaiveEdgeProbabilities(
    const std::vector<std::vector<VertexId>>& users, int num_items,
    int max_size, double d, std::int64_t min_count,
    const std::optional<std::vector<VertexId>>& history) {
  std::map<std::vector<VertexId>, double> out;
  std::function<double(const std::vector<VertexId>&)> p =
      [&](const std::vector<VertexId>& s) -> double {
    if (s.empty()) return 1.0;
    const std::vector<VertexId> prefix(s.begin(), s.end() - 1);
    const double ratio = static_cast<double>(NaiveCount(users, s)) /
                         (static_cast<double>(prefix.empty()
                                                  ? static_cast<std::int64_t>(
                                                        users.size())
                                                  : NaiveCount(users, prefix)) +
                          d);
    if (prefix.empty()) return ratio;
    if (history && NaiveIsSubsequence(prefix, *history)) return ratio;
    return p(prefix) * ratio;
  };
  std::vector<VertexId> s;
  std::function<void()> rec = [&] {
    if (!s.empty() && NaiveCount(users, s) >= std::max<std::int64_t>(min_count, 1)) {
      out[s] = p(s);
    }
    if (static_cast<int>(s.size()) == max_size) return;
    for (VertexId v = 0; v < num_items; ++v) {
      if (std::find(s.begin(), s.end(), v) != s.end()) continue;
      s.push_back(v);
      rec();
      s.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<VertexId> ClassicalGreedy(const DirectedHypergraph& graph,
                                      const UtilityFunction& h, int k) {
  const auto n = static_cast<VertexId>(graph.num_vertices());
  std::vector<char> has_loop(static_cast<std::size_t>(n), 0);
  for (const Hyperedge& e : graph.edges()) has_loop[e.first()] = 1;
  std::vector<VertexId> chosen;
  auto loops_of = [&](const std::vector<VertexId>& vs) {
    std::vector<EdgeId> ids;
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
      if (std::find(vs.begin(), vs.end(),
                    graph.edge(static_cast<EdgeId>(e)).first()) != vs.end()) {
        ids.push_back(static_cast<EdgeId>(e));
      }
    }
    return EdgeSet(ids);
  };
  while (static_cast<int>(chosen.size()) < k) {
    const double base = h.Value(loops_of(chosen));
    VertexId best = -1;
    double best_gain = -1.0;
    for (VertexId v = 0; v < n; ++v) {
      if (!has_loop[v] ||
          std::find(chosen.begin(), chosen.end(), v) != chosen.end()) {
        continue;
      }
      std::vector<VertexId> with = chosen;
      with.push_back(v);
      const double gain = h.Value(loops_of(with)) - base;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best < 0) break;
    chosen.push_back(best);
  }
  return chosen;
}

DirectedHypergraph RandomSelfLoopGraph(std::mt19937_64& rng, int n) {
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int loops = std::uniform_int_distribution<int>(1, n)(rng);
  std::uniform_real_distribution<double> value(0.05, 1.0);
  std::vector<Hyperedge> edges;
  for (int i = 0; i < loops; ++i) edges.push_back({{order[i]}, value(rng)});
  return DirectedHypergraph(n, std::move(edges));
}

SubsetTriple RandomTriple(std::mt19937_64& rng, int m) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(m));
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  const int t_size = std::uniform_int_distribution<int>(0, m - 1)(rng);
  const int s_size = std::uniform_int_distribution<int>(0, t_size)(rng);
  SubsetTriple out;
  out.s = EdgeSet(std::vector<EdgeId>(ids.begin(), ids.begin() + s_size));
  out.t = EdgeSet(std::vector<EdgeId>(ids.begin(), ids.begin() + t_size));
  out.e = ids[t_size];
  return out;
}

std::vector<VertexId> ToVector(const Sequence& sigma) {
  return {sigma.begin(), sigma.end()};
}

std::vector<std::vector<VertexId>> TenUserCorpus() {
  return {{0, 1, 2, 3},    {0, 1, 3},       {1, 0, 2, 4, 5}, {0, 2, 1},
          {3, 4, 5},       {0, 1, 2, 3, 4}, {5, 4, 3, 2},    {0, 3, 1, 2},
          {1, 2},          {2, 0, 1, 5}};
}

}  // namespace seqsub::testing
