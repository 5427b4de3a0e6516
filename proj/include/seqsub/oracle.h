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

// Exhaustive search over every non-repeating sequence of length <= k.
// Ground truth for small instances only.

#ifndef SEQSUB_ORACLE_H_
#define SEQSUB_ORACLE_H_

#include <cstdint>

#include "seqsub/hypergraph.h"
#include "seqsub/solvers.h"
#include "seqsub/utility.h"

namespace seqsub {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

struct OracleResult {
  Sequence sigma_star;  // lexicographically smallest maximizer
  double opt_value = 0.0;
  std::uint64_t sequences_examined = 0;
};

// sum_{j=0..k} n!/(n-j)!, saturating at UINT64_MAX.
std::uint64_t CountSequences(std::int64_t n, int k);

// Throws SizeError when CountSequences(n, k) exceeds `cap`.
OracleResult BruteForceOpt(const DirectedHypergraph& graph,
                           const UtilityFunction& h, int k,
                           std::uint64_t cap = kDefaultOracleCap);

struct RatioVerdict {
  bool holds = true;
  double ratio = 1.0;
  double bound = 0.0;
  double opt_value = 0.0;
};

// ratio = objective / opt; holds iff ratio >= bound - 1e-9. A zero optimum
// holds trivially with ratio 1.
RatioVerdict VerifyRatio(const DirectedHypergraph& graph,
                         const UtilityFunction& h, int k,
                         const SolveReport& report,
                         std::uint64_t cap = kDefaultOracleCap);

}  // namespace seqsub

#endif  // SEQSUB_ORACLE_H_
