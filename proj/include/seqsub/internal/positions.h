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

#ifndef SEQSUB_INTERNAL_POSITIONS_H_
#define SEQSUB_INTERNAL_POSITIONS_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "seqsub/hypergraph.h"

namespace seqsub::internal {

// Maps each vertex to an order key inside a sequence that grows at both
// ends. Keys only need to compare correctly, so appends count up and
// prepends count down.
class PositionIndex {
 public:
  static constexpr std::int64_t kAbsent =
      std::numeric_limits<std::int64_t>::min();

  explicit PositionIndex(std::int64_t n)
      : pos_(static_cast<std::size_t>(n), kAbsent) {}

  bool Contains(VertexId v) const { return pos_[v] != kAbsent; }
  std::int64_t key(VertexId v) const { return pos_[v]; }

  void Append(VertexId v) { pos_[v] = next_back_++; }
  void Prepend(VertexId v) { pos_[v] = --next_front_; }
  void Erase(VertexId v) { pos_[v] = kAbsent; }
  // Used by depth-first enumeration, where the sequence is a stack.
  void SetKey(VertexId v, std::int64_t key) { pos_[v] = key; }

  // All of e present with strictly increasing keys.
  bool Induces(std::span<const VertexId> e) const {
    std::int64_t prev = kAbsent;
    for (VertexId v : e) {
      const std::int64_t k = pos_[v];
      if (k == kAbsent || k <= prev) return false;
      prev = k;
    }
    return true;
  }

  // The present vertices of e form a prefix of e, in order.
  bool PrefixEligible(std::span<const VertexId> e) const {
    std::size_t i = 0;
    std::int64_t prev = kAbsent;
    for (; i < e.size(); ++i) {
      const std::int64_t k = pos_[e[i]];
      if (k == kAbsent) break;
      if (k <= prev) return false;
      prev = k;
    }
    for (; i < e.size(); ++i) {
      if (pos_[e[i]] != kAbsent) return false;
    }
    return true;
  }

  // The present vertices of e form a suffix of e, in order.
  bool SuffixEligible(std::span<const VertexId> e) const {
    std::size_t i = e.size();
    std::int64_t next = std::numeric_limits<std::int64_t>::max();
    for (; i > 0; --i) {
      const std::int64_t k = pos_[e[i - 1]];
      if (k == kAbsent) break;
      if (k >= next) return false;
      next = k;
    }
    for (; i > 0; --i) {
      if (pos_[e[i - 1]] != kAbsent) return false;
    }
    return true;
  }

 private:
  std::vector<std::int64_t> pos_;
  std::int64_t next_back_ = 0;
  std::int64_t next_front_ = 0;
};

}  // namespace seqsub::internal

#endif  // SEQSUB_INTERNAL_POSITIONS_H_
