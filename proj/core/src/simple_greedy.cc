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

// Batch dispatch: every round each processor reports r_j to S, and S hands
// the next n items in density order to the processors sorted by decreasing
// r_j, one each, sending the item when it fits and bottom otherwise. The
// cursor moves past an item whether or not it was sent. Every processor
// gets a reply every round, so a round costs exactly 2n messages.

#include <algorithm>
#include <memory>

#include "dmkp/algorithms.h"

namespace dmkp {
namespace {

int64_t CeilDiv(int64_t a, int64_t b) { return (a + b - 1) / b; }

class BatchSource final : public SourceProgram {
 public:
  BatchSource(const Instance& instance, bool with_final)
      : instance_(instance),
        with_final_(with_final),
        order_(SortByDensity(instance.items)),
        assignment_(Assignment::Empty(instance)),
        rounds_(CeilDiv(instance.num_items(), instance.num_knapsacks())) {}

  void Step(std::span<const Message> inbox, Outbox& out) override {
    if (rounds_ == 0) {
      halted_ = true;
      return;
    }
    if (inbox.empty()) return;  // reports are in flight

    const int n = instance_.num_knapsacks();
    std::vector<std::pair<int64_t, int>> reports;  // (r_j, j)
    for (const Message& m : inbox) {
      const auto* report = std::get_if<CapacityReport>(&m.payload);
      if (report == nullptr || m.from.is_source()) {
        throw ProtocolFault("source expected capacity reports, got " +
                            ToString(m.payload));
      }
      reports.emplace_back(report->remaining, m.from.value);
    }
    if (static_cast<int>(reports.size()) != n) {
      throw ProtocolFault("source received " + std::to_string(reports.size()) +
                          " reports for " + std::to_string(n) + " processors");
    }
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });

    for (const auto& [reported, j] : reports) {
      if (reported != assignment_.remaining[j - 1]) {
        throw ProtocolFault("p" + std::to_string(j) +
                            " reported a capacity the source did not expect");
      }
      if (cursor_ < instance_.num_items()) {
        const Item& item = instance_.items[order_[cursor_]];
        if (item.weight <= reported) {
          assignment_.Place(instance_, item.id, j - 1);
          out.Send(NodeId::Processor(j),
                   ItemOffer{item.id, item.cost, item.weight});
        } else {
          out.Send(NodeId::Processor(j), Bottom{});
        }
        ++cursor_;
      } else {
        out.Send(NodeId::Processor(j), Bottom{});
      }
    }

    if (++rounds_done_ == rounds_) {
      greedy_ = assignment_;
      if (with_final_) {
        final_ = FinalReassign(assignment_, instance_);
        assignment_ = final_.assignment;
        internal::SendFinalDirectives(final_, instance_, out);
      }
      halted_ = true;
    }
  }

  bool Halted() const override { return halted_; }

  int64_t rounds() const { return rounds_; }
  const Assignment& greedy() const { return greedy_; }
  const Assignment& assignment() const { return assignment_; }
  const std::vector<int>& changed() const { return final_.changed_knapsacks; }

 private:
  const Instance& instance_;
  bool with_final_;
  std::vector<int> order_;
  Assignment assignment_;
  Assignment greedy_ = assignment_;
  FinalOutcome final_;
  int64_t rounds_;
  int64_t rounds_done_ = 0;
  int cursor_ = 0;
  bool halted_ = false;
};

class BatchProcessor final : public NodeProgram {
 public:
  BatchProcessor(int id, int64_t capacity, int64_t rounds)
      : ledger_{id, capacity, capacity, {}}, rounds_left_(rounds) {}

  void Step(std::span<const Message> inbox, Outbox& out) override {
    if (awaiting_reply_ && ++waited_ == 1) {
      // The report is being delivered to S in this phase.
      if (!inbox.empty()) throw ProtocolFault("reply arrived too early");
      return;
    }
    bool replied = false;
    for (const Message& m : inbox) {
      if (!m.from.is_source()) {
        throw ProtocolFault("processor received a message from a processor");
      }
      if (const auto* offer = std::get_if<ItemOffer>(&m.payload)) {
        ledger_.Take(offer->item, offer->weight);
        replied = true;
      } else if (std::holds_alternative<Bottom>(m.payload)) {
        replied = true;
      } else if (const auto* d = std::get_if<FinalDirective>(&m.payload)) {
        ledger_.Replace(d->item, d->weight);
      } else {
        throw ProtocolFault("unexpected " + ToString(m.payload));
      }
    }
    if (replied != awaiting_reply_) {
      throw ProtocolFault("p" + std::to_string(ledger_.id) +
                          (replied ? " got an unsolicited reply"
                                   : " got no reply this round"));
    }
    awaiting_reply_ = false;
    if (rounds_left_ > 0) {
      out.Send(NodeId::Source(), CapacityReport{ledger_.remaining});
      --rounds_left_;
      awaiting_reply_ = true;
      waited_ = 0;
    }
  }

  const internal::ProcessorLedger& ledger() const { return ledger_; }

 private:
  internal::ProcessorLedger ledger_;
  int64_t rounds_left_;
  bool awaiting_reply_ = false;
  int waited_ = 0;
};

AlgorithmRun RunBatch(const Instance& instance, bool with_final) {
  ValidateInstance(instance);
  const int n = instance.num_knapsacks();
  const Network network = Network::Build(n, /*with_tree=*/false);

  BatchSource source(instance, with_final);
  std::vector<std::unique_ptr<BatchProcessor>> owned;
  std::vector<NodeProgram*> processors;
  std::vector<const internal::ProcessorLedger*> ledgers;
  for (int j = 1; j <= n; ++j) {
    owned.push_back(std::make_unique<BatchProcessor>(
        j, instance.capacities[j - 1], source.rounds()));
    processors.push_back(owned.back().get());
    ledgers.push_back(&owned.back()->ledger());
  }

  SimulationResult sim = RunProtocol(network, source, processors);
  internal::CheckLedgers(ledgers, source.assignment());

  AlgorithmRun run;
  run.algorithm = with_final ? Algorithm::kModified : Algorithm::kSimple;
  run.greedy = source.greedy();
  run.assignment = source.assignment();
  run.greedy_profit = Objective(run.greedy, instance);
  run.profit = Objective(run.assignment, instance);
  run.changed_knapsacks = source.changed();
  run.rounds = source.rounds();
  run.metrics = std::move(sim.metrics);
  run.trace = std::move(sim.trace);
  return run;
}

}  // namespace

AlgorithmRun RunSimpleGreedy(const Instance& instance) {
  return RunBatch(instance, /*with_final=*/false);
}

AlgorithmRun RunModifiedGreedy(const Instance& instance) {
  return RunBatch(instance, /*with_final=*/true);
}

}  // namespace dmkp
