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

#include "dmkp/oracle.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "int128.h"

namespace dmkp {
namespace {

class Enumerator {
 public:
  explicit Enumerator(const Instance& instance)
      : instance_(instance),
        current_(Assignment::Empty(instance)),
        best_(current_) {}

  OptimalSolution Run() {
    Visit(0, 0);
    return OptimalSolution{best_, best_profit_, explored_,
                           OracleMethod::kEnumeration};
  }

 private:
  void Visit(int item, int64_t profit) {
    ++explored_;
    if (item == instance_.num_items()) {
      if (profit > best_profit_) {
        best_profit_ = profit;
        best_ = current_;
      }
      return;
    }
    Visit(item + 1, profit);
    const Item& it = instance_.items[item];
    for (int j = 0; j < instance_.num_knapsacks(); ++j) {
      if (it.weight > current_.remaining[j]) continue;
      current_.placement[item] = j;
      current_.remaining[j] -= it.weight;
      Visit(item + 1, profit + it.cost);
      current_.remaining[j] += it.weight;
      current_.placement[item] = kUnassigned;
    }
  }

  const Instance& instance_;
  Assignment current_;
  Assignment best_;
  int64_t best_profit_ = 0;
  int64_t explored_ = 0;
};

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, int64_t budget)
      : instance_(instance),
        order_(SortByDensity(instance.items)),
        current_(Assignment::Empty(instance)),
        best_(current_),
        budget_(budget),
        pooled_(std::accumulate(instance.capacities.begin(),
                                instance.capacities.end(), int64_t{0})) {}

  std::optional<OptimalSolution> Run() {
    if (!Visit(0, 0)) return std::nullopt;
    return OptimalSolution{best_, best_profit_, explored_,
                           OracleMethod::kBranchAndBound};
  }

 private:
  // Floor of the fractional single-knapsack bound over order_[depth..].
  int64_t UpperBound(int depth, int64_t profit) const {
    int64_t room = pooled_;
    Int128 bound = profit;
    for (int k = depth; k < static_cast<int>(order_.size()) && room > 0; ++k) {
      const Item& it = instance_.items[order_[k]];
      if (it.weight <= room) {
        room -= it.weight;
        bound += it.cost;
      } else {
        bound += static_cast<Int128>(it.cost) * room / it.weight;
        room = 0;
      }
    }
    return static_cast<int64_t>(bound);
  }

  // Returns false when the budget is exhausted.
  bool Visit(int depth, int64_t profit) {
    if (++explored_ > budget_) return false;
    if (profit > best_profit_) {
      best_profit_ = profit;
      best_ = current_;
    }
    if (depth == static_cast<int>(order_.size())) return true;
    if (UpperBound(depth, profit) <= best_profit_) return true;

    const int item = order_[depth];
    const Item& it = instance_.items[item];
    // Knapsacks with equal r_j are interchangeable from here on; try one.
    std::vector<int> knapsacks(instance_.capacities.size());
    std::iota(knapsacks.begin(), knapsacks.end(), 0);
    std::stable_sort(knapsacks.begin(), knapsacks.end(), [&](int a, int b) {
      return current_.remaining[a] > current_.remaining[b];
    });
    int64_t last_tried = -1;
    for (int j : knapsacks) {
      const int64_t r = current_.remaining[j];
      if (r < it.weight) break;
      if (r == last_tried) continue;
      last_tried = r;
      current_.placement[item] = j;
      current_.remaining[j] -= it.weight;
      pooled_ -= it.weight;
      const bool ok = Visit(depth + 1, profit + it.cost);
      pooled_ += it.weight;
      current_.remaining[j] += it.weight;
      current_.placement[item] = kUnassigned;
      if (!ok) return false;
    }
    // Item left out.
    return Visit(depth + 1, profit);
  }

  const Instance& instance_;
  std::vector<int> order_;
  Assignment current_;
  Assignment best_;
  int64_t best_profit_ = 0;
  int64_t explored_ = 0;
  int64_t budget_;
  int64_t pooled_;
};

}  // namespace

Rational Rational::Of(int64_t num, int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

bool EnumerationWithinLimit(const Instance& instance, int64_t limit) {
  const int64_t base = int64_t{instance.num_knapsacks()} + 1;
  int64_t size = 1;
  for (int i = 0; i < instance.num_items(); ++i) {
    if (size > limit / base) return false;
    size *= base;
  }
  return size <= limit;
}

OptimalSolution EnumerateOptimum(const Instance& instance) {
  ValidateInstance(instance);
  return Enumerator(instance).Run();
}

std::optional<OptimalSolution> BranchAndBoundOptimum(const Instance& instance,
                                                     int64_t node_budget) {
  ValidateInstance(instance);
  return BranchAndBound(instance, node_budget).Run();
}

std::optional<OptimalSolution> ExactOptimum(const Instance& instance,
                                            const OracleOptions& options) {
  if (EnumerationWithinLimit(instance, options.enumeration_limit)) {
    return EnumerateOptimum(instance);
  }
  return BranchAndBoundOptimum(instance, options.node_budget);
}

Solution StrictSequentialGreedy(const Instance& instance) {
  ValidateInstance(instance);
  Solution solution{Assignment::Empty(instance), 0};
  Assignment& a = solution.assignment;
  for (int i : SortByDensity(instance.items)) {
    const Item& item = instance.items[i];
    int chosen = kUnassigned;
    for (int j = 0; j < instance.num_knapsacks(); ++j) {
      if (a.remaining[j] < item.weight) continue;
      if (chosen == kUnassigned || a.remaining[j] > a.remaining[chosen]) {
        chosen = j;
      }
    }
    if (chosen == kUnassigned) continue;
    a.Place(instance, i, chosen);
    solution.profit += item.cost;
  }
  return solution;
}

Solution BatchRoundGreedy(const Instance& instance) {
  ValidateInstance(instance);
  Solution solution{Assignment::Empty(instance), 0};
  Assignment& a = solution.assignment;
  const std::vector<int> order = SortByDensity(instance.items);
  const int n = instance.num_knapsacks();
  size_t cursor = 0;
  while (cursor < order.size()) {
    const std::vector<int64_t> snapshot = a.remaining;
    std::vector<int> slots(n);
    std::iota(slots.begin(), slots.end(), 0);
    std::stable_sort(slots.begin(), slots.end(),
                     [&](int x, int y) { return snapshot[x] > snapshot[y]; });
    for (int j : slots) {
      if (cursor == order.size()) break;
      const Item& item = instance.items[order[cursor++]];
      if (item.weight <= snapshot[j]) {
        a.Place(instance, item.id, j);
        solution.profit += item.cost;
      }
    }
  }
  return solution;
}

bool BoundHolds(int64_t profit, int64_t optimum, int num_knapsacks) {
  return static_cast<Int128>(profit) * (num_knapsacks + 1) >= optimum;
}

Rational ApproxRatio(int64_t profit, int64_t optimum) {
  if (optimum == 0) return Rational{1, 1};
  return Rational::Of(profit, optimum);
}

}  // namespace dmkp
