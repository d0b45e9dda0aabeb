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

#ifndef DMKP_GENERATOR_H_
#define DMKP_GENERATOR_H_

#include <cstdint>

#include "dmkp/instance.h"

namespace dmkp {

struct GenParams {
  int m = 0;
  int n = 1;
  int64_t cost_max = 50;      // costs drawn from [1, cost_max]
  int64_t weight_max = 50;    // weights drawn from [1, weight_max]
  int64_t capacity_min = 1;   // capacities drawn from [capacity_min, capacity_max]
  int64_t capacity_max = 100;
  uint64_t seed = 0;
};

// Throws std::invalid_argument on empty ranges, bounds < 1, m < 0 or n < 1.
void ValidateGenParams(const GenParams& params);

// Generator "mt19937_64-mod/v1": a std::mt19937_64 seeded with params.seed;
// each draw in [lo, hi] is lo + (next() mod (hi - lo + 1)). Draw order is
// cost then weight for items 0..m-1, followed by capacities 0..n-1. Both the
// engine and this mapping are fully specified, so instances (and their
// digests) are reproducible on any platform.
Instance GenRandom(const GenParams& params);

// n knapsacks of capacity W; n items of cost 2 and weight 1 followed by n
// items of cost W and weight W. Throws std::invalid_argument unless n >= 1
// and W >= 3 (light items strictly denser, heavy items strictly costlier).
Instance GenAdversarial(int n, int64_t capacity);

}  // namespace dmkp

#endif  // DMKP_GENERATOR_H_
