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

#include <algorithm>
#include <set>

#include "dmkp/algorithms.h"

namespace dmkp {

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSimple:
      return "simple";
    case Algorithm::kModified:
      return "modified";
    case Algorithm::kDistributed:
      return "dist";
    case Algorithm::kTree:
      return "tree";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (AlgorithmName(a) == name) return a;
  }
  return std::nullopt;
}

AlgorithmRun RunAlgorithm(Algorithm algorithm, const Instance& instance) {
  switch (algorithm) {
    case Algorithm::kSimple:
      return RunSimpleGreedy(instance);
    case Algorithm::kModified:
      return RunModifiedGreedy(instance);
    case Algorithm::kDistributed:
      return RunDistributedGreedy(instance);
    case Algorithm::kTree:
      return RunTreeGreedy(instance);
  }
  throw std::invalid_argument("unknown algorithm");
}

FinalOutcome FinalReassign(const Assignment& assignment,
                           const Instance& instance) {
  if (auto violation = CheckFeasible(assignment, instance)) {
    throw InvalidInstance("Final needs a feasible assignment: " +
                          violation->message);
  }
  FinalOutcome outcome{assignment, {}};
  Assignment& result = outcome.assignment;

  std::set<int> pool;
  for (int i = 0; i < instance.num_items(); ++i) {
    if (!result.IsAssigned(i)) pool.insert(i);
  }
  std::vector<KnapsackContents> contents = ContentsOf(result, instance);

  for (int j = 0; j < instance.num_knapsacks(); ++j) {
    std::optional<int> best;
    for (int i : pool) {  // ascending ids, so strict > keeps the smallest
      const Item& item = instance.items[i];
      if (item.weight > instance.capacities[j]) continue;
      if (!best || item.cost > instance.items[*best].cost) best = i;
    }
    if (!best || instance.items[*best].cost <= contents[j].profit) continue;

    for (int evicted : contents[j].items) {
      result.Remove(instance, evicted);
      pool.insert(evicted);
    }
    pool.erase(*best);
    result.Place(instance, *best, j);
    contents[j].items = {*best};
    contents[j].profit = instance.items[*best].cost;
    outcome.changed_knapsacks.push_back(j);
  }
  return outcome;
}

namespace internal {

void ProcessorLedger::Take(int item, int64_t weight) {
  if (weight > remaining) {
    throw ProtocolFault("p" + std::to_string(id) + " received item " +
                        std::to_string(item) + " that does not fit");
  }
  remaining -= weight;
  contents.push_back(item);
}

void ProcessorLedger::Replace(int item, int64_t weight) {
  if (weight > capacity) {
    throw ProtocolFault("p" + std::to_string(id) + " directed to hold item " +
                        std::to_string(item) + " above its capacity");
  }
  contents = {item};
  remaining = capacity - weight;
}

void CheckLedgers(const std::vector<const ProcessorLedger*>& ledgers,
                  const Assignment& recorded) {
  for (const ProcessorLedger* ledger : ledgers) {
    const int j = ledger->id - 1;
    std::vector<int> expected;
    for (int i = 0; i < static_cast<int>(recorded.placement.size()); ++i) {
      if (recorded.placement[i] == j) expected.push_back(i);
    }
    std::vector<int> held = ledger->contents;
    std::sort(held.begin(), held.end());
    if (held != expected || ledger->remaining != recorded.remaining[j]) {
      throw ProtocolFault("p" + std::to_string(ledger->id) +
                          " disagrees with the source's record");
    }
  }
}

void SendFinalDirectives(const FinalOutcome& outcome, const Instance& instance,
                         Outbox& out) {
  for (int j : outcome.changed_knapsacks) {
    const int item = [&] {
      for (int i = 0; i < instance.num_items(); ++i) {
        if (outcome.assignment.placement[i] == j) return i;
      }
      throw ProtocolFault("changed knapsack without contents");
    }();
    out.Send(NodeId::Processor(j + 1),
             FinalDirective{item, instance.items[item].weight});
  }
}

}  // namespace internal
}  // namespace dmkp
