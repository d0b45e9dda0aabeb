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
#include "dmkp/generator.h"
#include "dmkp/oracle.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_instances.h"

namespace dmkp {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using testing::InstanceA;
using testing::MakeInstance;

constexpr int U = kUnassigned;

TEST(AlgorithmNameTest, RoundTrips) {
  for (Algorithm a : kAllAlgorithms) EXPECT_EQ(ParseAlgorithm(AlgorithmName(a)), a);
  EXPECT_FALSE(ParseAlgorithm("greedy").has_value());
}

// --- simple ---------------------------------------------------------------

TEST(SimpleGreedyTest, AdversarialFamilyPicksLightItems) {
  const AlgorithmRun run = RunSimpleGreedy(GenAdversarial(2, 10));
  EXPECT_EQ(run.profit, 4);
  EXPECT_THAT(run.assignment.placement, ElementsAre(0, 1, U, U));
  EXPECT_EQ(ApproxRatio(run.profit, 20), (Rational{1, 5}));
}

TEST(SimpleGreedyTest, NoItems) {
  const AlgorithmRun run = RunSimpleGreedy(MakeInstance({}, {5, 5}));
  EXPECT_EQ(run.profit, 0);
  EXPECT_EQ(run.metrics.messages, 0);
  EXPECT_EQ(run.metrics.phases, 0);
  EXPECT_EQ(run.rounds, 0);
}

TEST(SimpleGreedyTest, InstanceABatchSemantics) {
  // Round 1: r=(10,7) takes a, b. Round 2: r=(6,3) rejects c (w7), d (w6).
  const AlgorithmRun run = RunSimpleGreedy(InstanceA());
  EXPECT_THAT(run.assignment.placement, ElementsAre(0, 1, U, U));
  EXPECT_EQ(run.profit, 14);
  EXPECT_EQ(run.metrics.messages, 8);
  EXPECT_EQ(run.rounds, 2);
  EXPECT_EQ(run.metrics.phases, 4);
  EXPECT_EQ(run.greedy, run.assignment);
}

TEST(SimpleGreedyTest, LastRoundRepliesToEveryProcessor) {
  // m=3, n=2: two rounds, 2n messages each even though the second round has
  // a single item left.
  const AlgorithmRun run = RunSimpleGreedy(MakeInstance({{1, 1}, {1, 1}, {1, 1}}, {5, 5}));
  EXPECT_EQ(run.rounds, 2);
  EXPECT_EQ(run.metrics.messages, 8);
  EXPECT_EQ(run.profit, 3);
}

TEST(SimpleGreedyTest, DispatchFollowsReportedCapacityOrder) {
  // Knapsack 1 is larger, so it receives the densest item.
  const AlgorithmRun run = RunSimpleGreedy(MakeInstance({{9, 3}, {4, 2}}, {3, 8}));
  EXPECT_THAT(run.assignment.placement, ElementsAre(1, 0));
  const std::string trace = DumpTrace(run.trace);
  EXPECT_THAT(trace, HasSubstr("1 p1 S cap(3)\n1 p2 S cap(8)\n"));
  EXPECT_THAT(trace, HasSubstr("2 S p1 offer(1,4,2)\n2 S p2 offer(0,9,3)\n"));
}

// --- modified -------------------------------------------------------------

TEST(ModifiedGreedyTest, AdversarialFamilySwapsToHeavyItems) {
  const AlgorithmRun run = RunModifiedGreedy(GenAdversarial(2, 10));
  EXPECT_EQ(run.greedy_profit, 4);
  EXPECT_EQ(run.profit, 20);
  EXPECT_THAT(run.assignment.placement, ElementsAre(U, U, 0, 1));
  EXPECT_THAT(run.changed_knapsacks, ElementsAre(0, 1));
  // Directives ride in the last dispatch phase.
  EXPECT_EQ(run.metrics.messages, 8 + 2);
  EXPECT_EQ(run.metrics.phases, 4);
}

TEST(ModifiedGreedyTest, NoUnassignedItemsMeansSameAsSimple) {
  const Instance inst = MakeInstance({{5, 2}, {4, 2}, {1, 1}}, {4, 3});
  const AlgorithmRun simple = RunSimpleGreedy(inst);
  const AlgorithmRun modified = RunModifiedGreedy(inst);
  ASSERT_THAT(simple.assignment.placement, ::testing::Each(::testing::Ne(U)));
  EXPECT_EQ(modified.assignment, simple.assignment);
  EXPECT_EQ(modified.metrics, simple.metrics);
  EXPECT_TRUE(modified.changed_knapsacks.empty());
}

TEST(ModifiedGreedyTest, InstanceASwapsSecondKnapsack) {
  const AlgorithmRun run = RunModifiedGreedy(InstanceA());
  EXPECT_THAT(run.assignment.placement, ElementsAre(0, U, 1, U));
  EXPECT_EQ(run.profit, 15);
  EXPECT_TRUE(BoundHolds(run.profit, 21, 2));
}

// --- dist -----------------------------------------------------------------

TEST(DistributedGreedyTest, InstanceAStrictGreedyThenFinal) {
  const AlgorithmRun run = RunDistributedGreedy(InstanceA());
  EXPECT_THAT(run.greedy.placement, ElementsAre(0, 1, U, 0));
  EXPECT_EQ(run.greedy_profit, 17);
  EXPECT_THAT(run.assignment.placement, ElementsAre(0, U, 1, 0));
  EXPECT_EQ(run.profit, 18);
  EXPECT_THAT(run.changed_knapsacks, ElementsAre(1));
  // 4 items * n^2 + 3 winner reports + 1 directive.
  EXPECT_EQ(run.metrics.messages, 4 * 4 + 3 + 1);
  EXPECT_EQ(run.metrics.phases, 3 * 4 + 1);
  EXPECT_EQ(run.rounds, 4);
}

TEST(DistributedGreedyTest, ItemHeavierThanEveryKnapsackIsDropped) {
  const AlgorithmRun run = RunDistributedGreedy(MakeInstance({{5, 20}}, {10, 12, 3}));
  EXPECT_EQ(run.profit, 0);
  EXPECT_EQ(run.metrics.messages, 9);  // n broadcast + n(n-1) reports, no winner
  EXPECT_EQ(run.metrics.phases, 3);    // the winner phase is silent
}

TEST(DistributedGreedyTest, DroppedItemCanReturnThroughFinal) {
  // Item 1 no longer fits after item 0, but Final prefers it (7 > 4).
  const AlgorithmRun run = RunDistributedGreedy(MakeInstance({{4, 2}, {7, 9}}, {10}));
  EXPECT_EQ(run.greedy_profit, 4);
  EXPECT_EQ(run.profit, 7);
  EXPECT_THAT(run.assignment.placement, ElementsAre(U, 0));
}

TEST(DistributedGreedyTest, MessagesWithinBoundWhenEveryItemFits) {
  const AlgorithmRun run = RunDistributedGreedy(
      MakeInstance({{1, 1}, {1, 1}, {1, 1}, {1, 1}}, {10, 10}));
  EXPECT_EQ(run.metrics.messages, 4 * (2 * 2 + 1));
  EXPECT_LE(run.metrics.messages, 4 * (2 + 2 * 2));
}

TEST(DistributedGreedyTest, TraceShowsAllToAllReports) {
  const AlgorithmRun run = RunDistributedGreedy(MakeInstance({{3, 4}}, {5, 2}));
  EXPECT_EQ(DumpTrace(run.trace),
            "1 S p1 weight(0,4)\n"
            "1 S p2 weight(0,4)\n"
            "2 p1 p2 pair(1,5)\n"
            "2 p2 p1 pair(2,bot)\n"
            "3 p1 S winner(1)\n");
}

// --- tree -----------------------------------------------------------------

TEST(TreeGreedyTest, CapacityTieGoesToSmallerId) {
  // Eligible for w=4: p1(5), p2(9), p4(9), p7(8).
  const Instance inst = MakeInstance({{1, 4}}, {5, 9, 3, 9, 1, 2, 8});
  const AlgorithmRun run = RunTreeGreedy(inst);
  EXPECT_THAT(run.greedy.placement, ElementsAre(1));
  EXPECT_EQ(RunDistributedGreedy(inst).greedy, run.greedy);
}

TEST(TreeGreedyTest, OneItemOnFourProcessors) {
  const AlgorithmRun run = RunTreeGreedy(MakeInstance({{1, 1}}, {3, 3, 3, 3}));
  EXPECT_EQ(run.metrics.messages, 9);  // 4 offers + 3 tree + root->S + award
  EXPECT_EQ(run.metrics.phases, 5);    // offer, 2 levels, root->S, award
}

TEST(TreeGreedyTest, PhasesPerItemOnEightProcessors) {
  const Instance inst =
      MakeInstance({{3, 2}, {1, 50}, {2, 2}}, {4, 4, 4, 4, 4, 4, 4, 4});
  const AlgorithmRun run = RunTreeGreedy(inst);
  EXPECT_EQ(run.metrics.phases, 6 * 3);
}

TEST(TreeGreedyTest, SingleProcessor) {
  const AlgorithmRun run = RunTreeGreedy(MakeInstance({{2, 1}, {1, 5}}, {3}));
  EXPECT_EQ(run.metrics.phases, 2 * 3);
  EXPECT_EQ(run.profit, 2);
  EXPECT_EQ(run.metrics.messages, 2 * (2 * 1) + 1);  // second item dropped
}

TEST(TreeGreedyTest, ConvergecastOnlyUsesTreeEdges) {
  const AlgorithmRun run = RunTreeGreedy(MakeInstance({{1, 1}}, {1, 2, 3, 4, 5, 6}));
  for (const PhaseRecord& phase : run.trace.phases) {
    for (const Message& m : phase.deliveries) {
      if (!std::holds_alternative<ConsensusPair>(m.payload)) continue;
      EXPECT_EQ(m.to.value, m.from.value / 2) << ToString(m.from);
    }
  }
  EXPECT_THAT(run.greedy.placement, ElementsAre(5));
}

TEST(TreeGreedyTest, InstanceAMatchesDistributed) {
  const AlgorithmRun tree = RunTreeGreedy(InstanceA());
  const AlgorithmRun dist = RunDistributedGreedy(InstanceA());
  EXPECT_EQ(tree.assignment, dist.assignment);
  EXPECT_EQ(tree.profit, 18);
  EXPECT_EQ(tree.metrics.messages, 2 * 4 * 2 + 3 + 1);
  EXPECT_EQ(tree.metrics.phases, 4 * (1 + 3));
}

// --- shared ---------------------------------------------------------------

TEST(AlgorithmsTest, EmptyInstanceEverywhere) {
  const Instance inst = MakeInstance({}, {1, 2, 3});
  for (Algorithm a : kAllAlgorithms) {
    const AlgorithmRun run = RunAlgorithm(a, inst);
    EXPECT_EQ(run.profit, 0);
    EXPECT_EQ(run.metrics.messages, 0);
  }
}

TEST(AlgorithmsTest, InvalidInstanceRejected) {
  for (Algorithm a : kAllAlgorithms) {
    EXPECT_THROW(RunAlgorithm(a, MakeInstance({{1, 0}}, {3})), InvalidInstance);
  }
}

TEST(AlgorithmsTest, RepeatedRunsAreIdentical) {
  const Instance inst = GenRandom({9, 3, 30, 20, 5, 40, 11});
  for (Algorithm a : kAllAlgorithms) {
    const AlgorithmRun first = RunAlgorithm(a, inst);
    const AlgorithmRun second = RunAlgorithm(a, inst);
    EXPECT_EQ(DumpTrace(first.trace), DumpTrace(second.trace));
    EXPECT_EQ(first.trace, second.trace);
    EXPECT_EQ(first.assignment, second.assignment);
  }
}

TEST(LedgerTest, MismatchIsAProtocolFault) {
  const Instance inst = InstanceA();
  Assignment recorded = Assignment::Empty(inst);
  recorded.Place(inst, 0, 0);
  internal::ProcessorLedger p1{1, 10, 10, {}};
  EXPECT_THROW(internal::CheckLedgers({&p1}, recorded), ProtocolFault);
  p1.Take(0, 4);
  EXPECT_NO_THROW(internal::CheckLedgers({&p1}, recorded));
  EXPECT_THROW(p1.Take(2, 7), ProtocolFault);
  EXPECT_THROW(p1.Replace(2, 11), ProtocolFault);
}

// --- trace audit ----------------------------------------------------------

TEST(AuditGreedyStepsTest, AcceptsRealTraces) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = GenRandom({8, 1 + static_cast<int>(seed % 5), 30, 30, 1, 60, seed});
    for (Algorithm a : {Algorithm::kDistributed, Algorithm::kTree}) {
      const AlgorithmRun run = RunAlgorithm(a, inst);
      EXPECT_EQ(AuditGreedySteps(run.trace, inst, a), std::nullopt);
    }
  }
}

TEST(AuditGreedyStepsTest, FlagsAwardToSmallerKnapsack) {
  const Instance inst = MakeInstance({{3, 4}}, {5, 6});
  AlgorithmRun run = RunDistributedGreedy(inst);
  // Rewrite the winner report so p1 (r=5) claims the item instead of p2 (r=6).
  for (PhaseRecord& phase : run.trace.phases) {
    for (Message& m : phase.deliveries) {
      if (std::holds_alternative<Winner>(m.payload)) {
        m.from = NodeId::Processor(1);
        m.payload = Winner{1};
      }
    }
  }
  const auto failure = AuditGreedySteps(run.trace, inst, Algorithm::kDistributed);
  ASSERT_TRUE(failure.has_value());
  EXPECT_THAT(*failure, HasSubstr("largest fitting knapsack is p2"));
}

TEST(AuditGreedyStepsTest, FlagsDroppedItemThatFits) {
  const Instance inst = MakeInstance({{3, 4}}, {5});
  AlgorithmRun run = RunTreeGreedy(inst);
  for (PhaseRecord& phase : run.trace.phases) {
    std::erase_if(phase.deliveries, [](const Message& m) {
      return m.from.is_source() && std::holds_alternative<Winner>(m.payload);
    });
  }
  const auto failure = AuditGreedySteps(run.trace, inst, Algorithm::kTree);
  ASSERT_TRUE(failure.has_value());
  EXPECT_THAT(*failure, HasSubstr("dropped"));
}

TEST(AuditGreedyStepsTest, RejectsBatchAlgorithms) {
  EXPECT_TRUE(AuditGreedySteps(Trace{}, InstanceA(), Algorithm::kSimple).has_value());
}

}  // namespace
}  // namespace dmkp
