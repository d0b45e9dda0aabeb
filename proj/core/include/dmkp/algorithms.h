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

#ifndef DMKP_ALGORITHMS_H_
#define DMKP_ALGORITHMS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmkp/assignment.h"
#include "dmkp/instance.h"
#include "dmkp/simnet.h"

namespace dmkp {

// A node program observed a message sequence the protocol cannot produce,
// e.g. two winners for one item or a consensus value from a non-child.
class ProtocolFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Algorithm {
  kSimple,       // batch dispatch by S
  kModified,     // batch dispatch followed by Final
  kDistributed,  // all-to-all capacity exchange per item, then Final
  kTree,         // convergecast over a binary tree per item, then Final
};

inline constexpr std::array<Algorithm, 4> kAllAlgorithms = {
    Algorithm::kSimple, Algorithm::kModified, Algorithm::kDistributed,
    Algorithm::kTree};

// "simple", "modified", "dist", "tree".
std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct FinalOutcome {
  Assignment assignment;
  // Knapsacks whose contents were replaced, ascending.
  std::vector<int> changed_knapsacks;
};

// For j = 0..n-1 in order: the costliest pool item with w_i <= W_j (ties to
// the smaller id) replaces K_j when its cost strictly exceeds c(K_j). The
// pool starts as the unassigned items; evicted items rejoin it.
FinalOutcome FinalReassign(const Assignment& assignment,
                           const Instance& instance);

struct AlgorithmRun {
  Algorithm algorithm = Algorithm::kSimple;
  Assignment greedy;      // placement before Final
  Assignment assignment;  // final placement
  int64_t greedy_profit = 0;
  int64_t profit = 0;
  std::vector<int> changed_knapsacks;
  // Batch rounds for kSimple/kModified; items offered for kDistributed/kTree.
  int64_t rounds = 0;
  RunMetrics metrics;
  Trace trace;
};

// Each of these validates the instance, simulates the protocol over a
// fresh network, and cross-checks every processor's final r_j and K_j
// against what S recorded (ProtocolFault on mismatch).
AlgorithmRun RunSimpleGreedy(const Instance& instance);
AlgorithmRun RunModifiedGreedy(const Instance& instance);
AlgorithmRun RunDistributedGreedy(const Instance& instance);
AlgorithmRun RunTreeGreedy(const Instance& instance);
AlgorithmRun RunAlgorithm(Algorithm algorithm, const Instance& instance);

// Replays a kDistributed or kTree trace from the initial capacities and
// checks each item went to a fitting knapsack of maximal remaining capacity
// (smallest processor id on ties), and that skipped items fit nowhere.
// Returns a description of the first failure, or nullopt.
std::optional<std::string> AuditGreedySteps(const Trace& trace,
                                            const Instance& instance,
                                            Algorithm algorithm);

namespace internal {

// Per-processor bookkeeping shared by the protocol implementations.
struct ProcessorLedger {
  int id = 0;  // 1-based
  int64_t capacity = 0;
  int64_t remaining = 0;
  std::vector<int> contents;  // item ids in arrival order

  void Take(int item, int64_t weight);
  void Replace(int item, int64_t weight);
};

// Throws ProtocolFault if a ledger disagrees with S's recorded assignment.
void CheckLedgers(const std::vector<const ProcessorLedger*>& ledgers,
                  const Assignment& recorded);

// Final directives for the changed knapsacks of `outcome`.
void SendFinalDirectives(const FinalOutcome& outcome, const Instance& instance,
                         Outbox& out);

}  // namespace internal

}  // namespace dmkp

#endif  // DMKP_ALGORITHMS_H_
