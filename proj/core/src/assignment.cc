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

#include "dmkp/assignment.h"

namespace dmkp {
namespace {

void CheckShape(const Assignment& assignment, const Instance& instance) {
  if (static_cast<int>(assignment.placement.size()) != instance.num_items() ||
      static_cast<int>(assignment.remaining.size()) !=
          instance.num_knapsacks()) {
    throw InvalidInstance("assignment shape does not match instance");
  }
}

}  // namespace

Assignment Assignment::Empty(const Instance& instance) {
  return Assignment{
      std::vector<int>(instance.items.size(), kUnassigned),
      instance.capacities,
  };
}

void Assignment::Place(const Instance& instance, int item, int knapsack) {
  CheckShape(*this, instance);
  if (item < 0 || item >= instance.num_items()) {
    throw InvalidInstance("unknown item " + std::to_string(item));
  }
  if (knapsack < 0 || knapsack >= instance.num_knapsacks()) {
    throw InvalidInstance("unknown knapsack " + std::to_string(knapsack));
  }
  if (placement[item] != kUnassigned) {
    throw InvalidInstance("item " + std::to_string(item) +
                          " is already assigned");
  }
  const int64_t weight = instance.items[item].weight;
  if (weight > remaining[knapsack]) {
    throw InvalidInstance("item " + std::to_string(item) +
                          " does not fit knapsack " + std::to_string(knapsack));
  }
  placement[item] = knapsack;
  remaining[knapsack] -= weight;
}

void Assignment::Remove(const Instance& instance, int item) {
  CheckShape(*this, instance);
  if (item < 0 || item >= instance.num_items() ||
      placement[item] == kUnassigned) {
    throw InvalidInstance("item " + std::to_string(item) + " is not assigned");
  }
  remaining[placement[item]] += instance.items[item].weight;
  placement[item] = kUnassigned;
}

std::vector<KnapsackContents> ContentsOf(const Assignment& assignment,
                                         const Instance& instance) {
  CheckShape(assignment, instance);
  std::vector<KnapsackContents> contents(instance.capacities.size());
  for (int j = 0; j < instance.num_knapsacks(); ++j) contents[j].knapsack = j;
  for (int i = 0; i < instance.num_items(); ++i) {
    const int j = assignment.placement[i];
    if (j == kUnassigned) continue;
    if (j < 0 || j >= instance.num_knapsacks()) {
      throw InvalidInstance("item " + std::to_string(i) +
                            " placed in unknown knapsack " + std::to_string(j));
    }
    contents[j].items.push_back(i);
    contents[j].profit += instance.items[i].cost;
  }
  return contents;
}

int64_t Objective(const Assignment& assignment, const Instance& instance) {
  CheckShape(assignment, instance);
  int64_t total = 0;
  for (int i = 0; i < instance.num_items(); ++i) {
    const int j = assignment.placement[i];
    if (j == kUnassigned) continue;
    if (j < 0 || j >= instance.num_knapsacks()) {
      throw InvalidInstance("item " + std::to_string(i) +
                            " placed in unknown knapsack " + std::to_string(j));
    }
    total += instance.items[i].cost;
  }
  return total;
}

std::optional<Violation> CheckFeasible(const Assignment& assignment,
                                       const Instance& instance) {
  if (static_cast<int>(assignment.placement.size()) != instance.num_items() ||
      static_cast<int>(assignment.remaining.size()) !=
          instance.num_knapsacks()) {
    return Violation{Violation::Kind::kShapeMismatch, kUnassigned, kUnassigned,
                     "assignment shape does not match instance"};
  }
  std::vector<int64_t> load(instance.capacities.size(), 0);
  for (int i = 0; i < instance.num_items(); ++i) {
    const int j = assignment.placement[i];
    if (j == kUnassigned) continue;
    if (j < 0 || j >= instance.num_knapsacks()) {
      return Violation{Violation::Kind::kUnknownKnapsack, j, i,
                       "item " + std::to_string(i) +
                           " placed in unknown knapsack " + std::to_string(j)};
    }
    load[j] += instance.items[i].weight;
  }
  for (int j = 0; j < instance.num_knapsacks(); ++j) {
    if (load[j] > instance.capacities[j]) {
      return Violation{Violation::Kind::kOverload, j, kUnassigned,
                       "knapsack " + std::to_string(j) + " load " +
                           std::to_string(load[j]) + " > " +
                           std::to_string(instance.capacities[j])};
    }
    if (assignment.remaining[j] != instance.capacities[j] - load[j]) {
      return Violation{Violation::Kind::kStaleRemaining, j, kUnassigned,
                       "knapsack " + std::to_string(j) + " caches r=" +
                           std::to_string(assignment.remaining[j]) +
                           " but recomputes " +
                           std::to_string(instance.capacities[j] - load[j])};
    }
  }
  return std::nullopt;
}

}  // namespace dmkp
