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

#ifndef DMKP_INSTANCE_H_
#define DMKP_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmkp {

// Largest cost, weight or capacity accepted by ValidateInstance. Keeps every
// load and profit sum comfortably inside int64 for any realistic item count.
inline constexpr int64_t kMaxMagnitude = 1'000'000'000'000;

// Thrown when an instance (or something indexed against it) is malformed.
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Item {
  int id = 0;
  int64_t cost = 0;    // profit units, >= 0
  int64_t weight = 1;  // weight units, >= 1

  friend bool operator==(const Item&, const Item&) = default;
};

// A Multiple Knapsack Problem input. Knapsack j has capacity capacities[j];
// item ids equal their position in `items`.
struct Instance {
  std::vector<Item> items;
  std::vector<int64_t> capacities;

  int num_items() const { return static_cast<int>(items.size()); }
  int num_knapsacks() const { return static_cast<int>(capacities.size()); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws InvalidInstance describing the first violated invariant:
// n >= 1, ids are 0..m-1 in order, cost >= 0, weight >= 1, capacity >= 0.
void ValidateInstance(const Instance& instance);

// Orders items by cost/weight, computed exactly as c_a*w_b vs c_b*w_a.
// Proportional items compare equal.
std::strong_ordering CompareDensity(const Item& a, const Item& b);

// Item ids by decreasing density; equal densities keep ascending id.
std::vector<int> SortByDensity(std::span<const Item> items);

}  // namespace dmkp

#endif  // DMKP_INSTANCE_H_
