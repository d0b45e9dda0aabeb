// Copyright 2026 The dmkp Authors
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

#ifndef DMKP_ORACLE_H_
#define DMKP_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "dmkp/assignment.h"
#include "dmkp/instance.h"

namespace dmkp {

// Reduced fraction with positive denominator.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  static Rational Of(int64_t num, int64_t den);
  std::string ToString() const;  // "num/den"

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct Solution {
  Assignment assignment;
  int64_t profit = 0;
};

enum class OracleMethod { kEnumeration, kBranchAndBound };

struct OptimalSolution {
  Assignment assignment;
  int64_t optimum = 0;
  int64_t explored_nodes = 0;
  OracleMethod method = OracleMethod::kEnumeration;
};

struct OracleOptions {
  // Exhaustive enumeration is used while (n+1)^m stays at or below this.
  int64_t enumeration_limit = 100'000'000;
  // Branch-and-bound gives up (oracle unavailable) past this many nodes.
  int64_t node_budget = 20'000'000;
};

// True when (n+1)^m <= limit.
bool EnumerationWithinLimit(const Instance& instance, int64_t limit);

// Tries every placement of each item into {none, 0..n-1}, pruning only
// placements that overflow a knapsack. No size guard.
OptimalSolution EnumerateOptimum(const Instance& instance);

// Depth-first branch-and-bound in density order. The bound fills the pooled
// remaining capacity sum_j r_j fractionally with the undecided items.
// nullopt when the node budget runs out.
std::optional<OptimalSolution> BranchAndBoundOptimum(const Instance& instance,
                                                     int64_t node_budget);

// Enumeration under the size guard, branch-and-bound above it. nullopt means
// "oracle unavailable"; it never returns a non-optimal answer.
std::optional<OptimalSolution> ExactOptimum(const Instance& instance,
                                            const OracleOptions& options = {});

// Items in density order, each to the fitting knapsack with the largest r_j
// (smallest index on ties), dropped when none fits.
Solution StrictSequentialGreedy(const Instance& instance);

// Rounds of n: capacities are snapshotted at round start, knapsacks sorted
// by decreasing r_j (ties by index), and the next n items in density order
// matched positionally; an item that does not fit its slot is dropped.
Solution BatchRoundGreedy(const Instance& instance);

// profit * (n+1) >= optimum, in exact integer arithmetic.
bool BoundHolds(int64_t profit, int64_t optimum, int num_knapsacks);

// profit/optimum, reduced; defined as 1 when optimum is 0.
Rational ApproxRatio(int64_t profit, int64_t optimum);

}  // namespace dmkp

#endif  // DMKP_ORACLE_H_
