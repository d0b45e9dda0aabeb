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

#ifndef DMKP_ASSIGNMENT_H_
#define DMKP_ASSIGNMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmkp/instance.h"

namespace dmkp {

inline constexpr int kUnassigned = -1;

// Partial map item -> knapsack, with cached remaining capacity per knapsack.
// Knapsack indices are 0-based positions in Instance::capacities.
struct Assignment {
  std::vector<int> placement;    // placement[i] is a knapsack or kUnassigned
  std::vector<int64_t> remaining;  // r_j = W_j - load_j

  // Nothing placed; remaining == capacities.
  static Assignment Empty(const Instance& instance);

  bool IsAssigned(int item) const { return placement.at(item) != kUnassigned; }

  // Places an unassigned item and deducts its weight. Throws InvalidInstance
  // on unknown ids, a second placement, or an item that does not fit.
  void Place(const Instance& instance, int item, int knapsack);

  // Removes an assigned item and restores its weight.
  void Remove(const Instance& instance, int item);

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct KnapsackContents {
  int knapsack = 0;
  std::vector<int> items;  // ascending ids
  int64_t profit = 0;

  friend bool operator==(const KnapsackContents&,
                         const KnapsackContents&) = default;
};

// Per-knapsack contents K_j and their profit c(K_j).
std::vector<KnapsackContents> ContentsOf(const Assignment& assignment,
                                         const Instance& instance);

// Total cost of all assigned items. Throws InvalidInstance when the
// assignment does not match the instance shape.
int64_t Objective(const Assignment& assignment, const Instance& instance);

struct Violation {
  enum class Kind {
    kShapeMismatch,    // placement/remaining sizes differ from the instance
    kUnknownKnapsack,  // placement names a knapsack that does not exist
    kOverload,         // load_j > W_j
    kStaleRemaining,   // cached r_j disagrees with W_j - load_j
  };
  Kind kind;
  int knapsack = kUnassigned;
  int item = kUnassigned;
  std::string message;
};

// nullopt when every knapsack's load is within its capacity and every cached
// r_j matches recomputation; otherwise the first violated constraint.
// Single assignment per item holds structurally since placement is a map.
std::optional<Violation> CheckFeasible(const Assignment& assignment,
                                       const Instance& instance);

}  // namespace dmkp

#endif  // DMKP_ASSIGNMENT_H_
