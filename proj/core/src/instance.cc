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

#include "dmkp/instance.h"

#include "int128.h"

#include <algorithm>
#include <numeric>

namespace dmkp {

void ValidateInstance(const Instance& instance) {
  if (instance.capacities.empty()) {
    throw InvalidInstance("instance needs at least one knapsack");
  }
  for (int j = 0; j < instance.num_knapsacks(); ++j) {
    const int64_t capacity = instance.capacities[j];
    if (capacity < 0 || capacity > kMaxMagnitude) {
      throw InvalidInstance("capacity of knapsack " + std::to_string(j) +
                            " out of range: " + std::to_string(capacity));
    }
  }
  for (int i = 0; i < instance.num_items(); ++i) {
    const Item& item = instance.items[i];
    const std::string where = "item at position " + std::to_string(i);
    if (item.id != i) {
      throw InvalidInstance(where + " has id " + std::to_string(item.id));
    }
    if (item.cost < 0 || item.cost > kMaxMagnitude) {
      throw InvalidInstance(where + " has cost out of range: " +
                            std::to_string(item.cost));
    }
    if (item.weight < 1 || item.weight > kMaxMagnitude) {
      throw InvalidInstance(where + " has weight out of range: " +
                            std::to_string(item.weight));
    }
  }
}

std::strong_ordering CompareDensity(const Item& a, const Item& b) {
  const Int128 lhs = static_cast<Int128>(a.cost) * b.weight;
  const Int128 rhs = static_cast<Int128>(b.cost) * a.weight;
  return lhs <=> rhs;
}

std::vector<int> SortByDensity(std::span<const Item> items) {
  std::vector<int> positions(items.size());
  std::iota(positions.begin(), positions.end(), 0);
  std::stable_sort(positions.begin(), positions.end(), [&](int a, int b) {
    const auto order = CompareDensity(items[a], items[b]);
    if (order != 0) return order > 0;
    return items[a].id < items[b].id;
  });
  std::vector<int> ids;
  ids.reserve(items.size());
  for (int p : positions) ids.push_back(items[p].id);
  return ids;
}

}  // namespace dmkp
