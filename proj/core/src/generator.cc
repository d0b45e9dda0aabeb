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

#include "dmkp/generator.h"

#include <random>
#include <stdexcept>
#include <string>

namespace dmkp {
namespace {

int64_t Draw(std::mt19937_64& engine, int64_t lo, int64_t hi) {
  const auto span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int64_t>(engine() % span);
}

}  // namespace

void ValidateGenParams(const GenParams& p) {
  if (p.m < 0) throw std::invalid_argument("m must be >= 0");
  if (p.n < 1) throw std::invalid_argument("n must be >= 1");
  if (p.cost_max < 1 || p.weight_max < 1 || p.capacity_min < 1) {
    throw std::invalid_argument("range bounds must be >= 1");
  }
  if (p.capacity_max < p.capacity_min) {
    throw std::invalid_argument("capacity range is empty");
  }
  if (p.cost_max > kMaxMagnitude || p.weight_max > kMaxMagnitude ||
      p.capacity_max > kMaxMagnitude) {
    throw std::invalid_argument("range bound exceeds " +
                                std::to_string(kMaxMagnitude));
  }
}

Instance GenRandom(const GenParams& p) {
  ValidateGenParams(p);
  std::mt19937_64 engine(p.seed);
  Instance instance;
  instance.items.reserve(p.m);
  for (int i = 0; i < p.m; ++i) {
    const int64_t cost = Draw(engine, 1, p.cost_max);
    const int64_t weight = Draw(engine, 1, p.weight_max);
    instance.items.push_back(Item{i, cost, weight});
  }
  instance.capacities.reserve(p.n);
  for (int j = 0; j < p.n; ++j) {
    instance.capacities.push_back(Draw(engine, p.capacity_min, p.capacity_max));
  }
  return instance;
}

Instance GenAdversarial(int n, int64_t capacity) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (capacity < 3) {
    throw std::invalid_argument(
        "W must be >= 3: below that a cost-W item is no more profitable than "
        "a cost-2 item and the family loses its worst case");
  }
  if (capacity > kMaxMagnitude) throw std::invalid_argument("W too large");
  Instance instance;
  for (int i = 0; i < n; ++i) instance.items.push_back(Item{i, 2, 1});
  for (int i = n; i < 2 * n; ++i) {
    instance.items.push_back(Item{i, capacity, capacity});
  }
  instance.capacities.assign(n, capacity);
  return instance;
}

}  // namespace dmkp
