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

#include "dmkp/algorithms.h"

namespace dmkp {
namespace {

struct PendingItem {
  int item = 0;
  int64_t weight = 0;
  bool awarded = false;
};

// Smallest-id processor with maximal r_j among those with r_j >= weight.
std::optional<int> ExpectedWinner(const std::vector<int64_t>& remaining,
                                  int64_t weight) {
  std::optional<int> best;
  for (int j = 0; j < static_cast<int>(remaining.size()); ++j) {
    if (remaining[j] < weight) continue;
    if (!best || remaining[j] > remaining[*best]) best = j;
  }
  return best;
}

}  // namespace

std::optional<std::string> AuditGreedySteps(const Trace& trace,
                                            const Instance& instance,
                                            Algorithm algorithm) {
  if (algorithm != Algorithm::kDistributed && algorithm != Algorithm::kTree) {
    return "greedy-step audit applies to dist and tree traces only";
  }
  std::vector<int64_t> remaining = instance.capacities;
  std::optional<PendingItem> current;

  auto close_item = [&]() -> std::optional<std::string> {
    if (current && !current->awarded &&
        ExpectedWinner(remaining, current->weight)) {
      return "item " + std::to_string(current->item) +
             " was dropped although a knapsack could hold it";
    }
    return std::nullopt;
  };

  for (const PhaseRecord& record : trace.phases) {
    for (const Message& m : record.deliveries) {
      if (const auto* offer = std::get_if<WeightOffer>(&m.payload)) {
        if (current && current->item == offer->item) continue;  // same broadcast
        if (auto failure = close_item()) return failure;
        current = PendingItem{offer->item, offer->weight, false};
        continue;
      }
      const auto* winner = std::get_if<Winner>(&m.payload);
      if (winner == nullptr) continue;
      const bool is_award = algorithm == Algorithm::kDistributed
                                ? m.to.is_source()
                                : m.from.is_source();
      if (!is_award) continue;
      if (!current || current->awarded || !winner->processor) {
        return "phase " + std::to_string(record.phase) +
               ": award without an open item";
      }
      const int j = *winner->processor - 1;
      const std::optional<int> expected =
          ExpectedWinner(remaining, current->weight);
      if (!expected || *expected != j) {
        return "phase " + std::to_string(record.phase) + ": item " +
               std::to_string(current->item) + " went to p" +
               std::to_string(j + 1) + " but the largest fitting knapsack is " +
               (expected ? "p" + std::to_string(*expected + 1) : "none");
      }
      remaining[j] -= current->weight;
      current->awarded = true;
    }
  }
  return close_item();
}

}  // namespace dmkp
