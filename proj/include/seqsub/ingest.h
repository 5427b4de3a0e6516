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

// Interaction-log ingestion and training of the conditional-probability
// hypergraph.
//
// For an item tuple s with last element s_l and prefix s' (s minus s_l),
// N_s counts the training users whose history contains s as an
// order-preserving subsequence, N_() is the number of training users, and
//
//   p_s = N_s / (N_s' + d)           if s' is contained in the history,
//   p_s = p_s' * N_s / (N_s' + d)    otherwise, with p_() = 1.
//
// Without a history every non-empty s' counts as not contained.

#ifndef SEQSUB_INGEST_H_
#define SEQSUB_INGEST_H_

#include <algorithm>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "seqsub/hypergraph.h"

namespace seqsub {

struct InteractionRecord {
  std::string user;
  std::string item;
  std::int64_t timestamp = 0;
  double completion = 1.0;  // optional "completion" column, in [0, 1]
  std::size_t line = 0;     // 1-based source line
};

// Dense ids for item names, in order of first appearance.
class ItemTable {
 public:
  VertexId Intern(std::string_view name);
  std::optional<VertexId> Find(std::string_view name) const;
  const std::string& name(VertexId v) const { return names_[v]; }
  std::span<const std::string> names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
};

struct InteractionLog {
  std::vector<InteractionRecord> records;
  ItemTable items;
};

// Seconds since the Unix epoch from an integer or an ISO-8601 date/time
// (YYYY-MM-DD, optionally followed by Thh:mm[:ss[.fff]] and Z or +hh:mm).
std::optional<std::int64_t> ParseTimestamp(std::string_view text);

// CSV with a header naming user, item, timestamp and optionally completion
// columns, in any order. Throws ParseError with the line number on a bad
// row and InputError on an empty or header-less file.
InteractionLog ReadInteractionLog(std::istream& in);
InteractionLog ReadInteractionLogFile(const std::string& path);

struct TrainConfig {
  int max_edge_size = 3;
  double smoothing = 20.0;            // d
  std::int64_t min_user_events = 0;
  std::int64_t max_user_events = 0;   // 0 = unlimited
  std::int64_t min_item_events = 0;
  std::int64_t min_count = 2;         // keep s only when N_s >= min_count
  int folds = 10;
  double test_fraction = 0.0;         // 0 = 1 / folds

  // Throws ConfigError.
  void Validate() const;
};

inline constexpr int kMaxEdgeSizeLimit = 8;

struct UserSequence {
  std::string user;
  Sequence items;                  // time-ordered, first occurrence kept
  std::vector<double> completion;  // parallel to items
};

// Groups by user (first-appearance order), sorts each user's events by
// timestamp with ties kept in file order, drops repeated items, then drops
// users outside [min_user_events, max_user_events] and finally items seen
// by fewer than min_item_events of the remaining users.
std::vector<UserSequence> ExtractUserSequences(const InteractionLog& log,
                                               const TrainConfig& config);

// An item tuple of at most kMaxEdgeSizeLimit entries, usable as a hash key.
class ItemTuple {
 public:
  ItemTuple() = default;
  explicit ItemTuple(std::span<const VertexId> items);

  std::size_t size() const { return size_; }
  std::span<const VertexId> items() const { return {data_.data(), size_}; }
  VertexId last() const { return data_[size_ - 1]; }
  ItemTuple prefix() const { return ItemTuple(items().first(size_ - 1)); }
  void push_back(VertexId v) { data_[size_++] = v; }
  void pop_back() { --size_; }

  friend bool operator==(const ItemTuple& a, const ItemTuple& b) {
    return std::ranges::equal(a.items(), b.items());
  }
  friend bool operator<(const ItemTuple& a, const ItemTuple& b) {
    return std::ranges::lexicographical_compare(a.items(), b.items());
  }

  struct Hash {
    std::size_t operator()(const ItemTuple& t) const;
  };

 private:
  std::array<VertexId, kMaxEdgeSizeLimit> data_{};
  std::size_t size_ = 0;
};

// N_s for every tuple observed in at least one user, plus N_() = number of
// users. Merging is associative and order-independent.
class SubsequenceCounts {
 public:
  SubsequenceCounts() = default;
  explicit SubsequenceCounts(int max_size) : max_size_(max_size) {}

  int max_size() const { return max_size_; }
  std::int64_t num_users() const { return num_users_; }
  // N_s; the empty tuple gives num_users(), unseen tuples give 0.
  std::int64_t count(std::span<const VertexId> s) const;
  std::size_t num_tuples() const { return counts_.size(); }

  void AddUser(std::span<const VertexId> sequence);
  void Set(const ItemTuple& s, std::int64_t count) { counts_[s] = count; }
  void set_num_users(std::int64_t n) { num_users_ = n; }
  void Merge(const SubsequenceCounts& other);

  // Tuples in lexicographic order with their counts.
  std::vector<std::pair<ItemTuple, std::int64_t>> SortedEntries() const;

 private:
  int max_size_ = 0;
  std::int64_t num_users_ = 0;
  std::unordered_map<ItemTuple, std::int64_t, ItemTuple::Hash> counts_;
};

SubsequenceCounts CountSubsequences(std::span<const Sequence> users,
                                    int max_edge_size);

struct TrainedModel {
  // One edge per retained tuple s (lexicographic order), value p_s.
  DirectedHypergraph graph;
  std::vector<std::int64_t> edge_counts;  // N_s per edge
  std::int64_t num_users = 0;             // N_()
  double smoothing = 0.0;
  bool history_aware = false;
};

// Keeps tuples with |s| <= config.max_edge_size and N_s >= config.min_count.
// Throws InputError when N_s' + d is zero for some retained s.
TrainedModel BuildModel(const SubsequenceCounts& counts,
                        std::int64_t num_items, const TrainConfig& config,
                        const std::optional<Sequence>& history = std::nullopt);

// Treats `history` as already consumed: an edge survives when its history
// vertices form a prefix of it, in history order, and at least one vertex
// remains; the surviving edge keeps its value and drops that prefix.
DirectedHypergraph ConditionOnHistory(const DirectedHypergraph& graph,
                                      const Sequence& history);

// Precomputed form of BuildModel for many histories over the same counts.
// Conditioned(h) returns exactly the graph of
// ConditionOnHistory(BuildModel(counts, num_items, config, h).graph, h)
// in time linear in the number of retained tuples.
class ConditionalModel {
 public:
  ConditionalModel(const SubsequenceCounts& counts, std::int64_t num_items,
                   const TrainConfig& config);

  // The history-free model (BuildModel without a history).
  const DirectedHypergraph& base() const { return base_; }
  DirectedHypergraph Conditioned(const Sequence& history) const;

 private:
  struct Entry {
    ItemTuple tuple;
    double ratio = 0.0;  // N_s / (N_s' + d)
    std::int64_t parent = -1;  // index of s', -1 for the empty prefix
  };
  std::int64_t num_items_ = 0;
  std::vector<Entry> entries_;  // lexicographic
  DirectedHypergraph base_;
};

struct Fold {
  std::vector<std::size_t> train;  // indices into the user list
  std::vector<std::size_t> test;
};

// User-level disjoint folds; deterministic for a given seed.
std::vector<Fold> SplitFolds(std::size_t num_users, const TrainConfig& config,
                             std::uint64_t seed);

}  // namespace seqsub

#endif  // SEQSUB_INGEST_H_
