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

// Per item, in density order:
//   phase 1  S broadcasts <i, w_i> to every processor            (n)
//   phase 2  every p_j broadcasts <j, r_j> or <j, bot> to peers   (n(n-1))
//   phase 3  the unique argmax sends <j> to S and deducts w_i     (0 or 1)
// Each processor evaluates the same argmax over the same reports, so at most
// one winner exists. When no knapsack fits, phase 3 is silent and S moves on.
// After the last item S computes Final and sends one directive per changed
// knapsack, which takes one extra phase when any knapsack changes.

#include <memory>

#include "dmkp/algorithms.h"

namespace dmkp {
namespace {

constexpr int kPhasesPerItem = 3;

class BroadcastSource final : public SourceProgram {
 public:
  explicit BroadcastSource(const Instance& instance)
      : instance_(instance),
        order_(SortByDensity(instance.items)),
        assignment_(Assignment::Empty(instance)) {}

  void Step(std::span<const Message> inbox, Outbox& out) override {
    if (instance_.num_items() == 0) {
      halted_ = true;
      return;
    }
    if (cursor_ < 0) {  // start-up
      Offer(0, out);
      return;
    }
    if (++waited_ < kPhasesPerItem) {
      if (!inbox.empty()) throw ProtocolFault("source heard back too early");
      return;
    }

    std::optional<int> winner;
    for (const Message& m : inbox) {
      const auto* w = std::get_if<Winner>(&m.payload);
      if (w == nullptr || !w->processor || *w->processor != m.from.value) {
        throw ProtocolFault("source expected a winner report, got " +
                            ToString(m.payload) + " from " + ToString(m.from));
      }
      if (winner) {
        throw ProtocolFault("two winners for item " +
                            std::to_string(order_[cursor_]));
      }
      winner = *w->processor;
    }
    if (winner) assignment_.Place(instance_, order_[cursor_], *winner - 1);

    if (cursor_ + 1 < instance_.num_items()) {
      Offer(cursor_ + 1, out);
      return;
    }
    greedy_ = assignment_;
    final_ = FinalReassign(assignment_, instance_);
    assignment_ = final_.assignment;
    internal::SendFinalDirectives(final_, instance_, out);
    halted_ = true;
  }

  bool Halted() const override { return halted_; }

  const Assignment& greedy() const { return greedy_; }
  const Assignment& assignment() const { return assignment_; }
  const std::vector<int>& changed() const { return final_.changed_knapsacks; }

 private:
  void Offer(int position, Outbox& out) {
    cursor_ = position;
    waited_ = 0;
    const Item& item = instance_.items[order_[position]];
    out.BroadcastToProcessors(WeightOffer{item.id, item.weight});
  }

  const Instance& instance_;
  std::vector<int> order_;
  Assignment assignment_;
  Assignment greedy_ = assignment_;
  FinalOutcome final_;
  int cursor_ = -1;
  int waited_ = 0;
  bool halted_ = false;
};

class BroadcastProcessor final : public NodeProgram {
 public:
  BroadcastProcessor(int id, int64_t capacity, int n)
      : ledger_{id, capacity, capacity, {}}, n_(n) {}

  void Step(std::span<const Message> inbox, Outbox& out) override {
    if (pending_) {
      Decide(inbox, out);
      return;
    }
    for (const Message& m : inbox) {
      if (!m.from.is_source()) {
        throw ProtocolFault("capacity report outside a consensus phase");
      }
      if (const auto* offer = std::get_if<WeightOffer>(&m.payload)) {
        pending_ = *offer;
        std::optional<int64_t> eligible;
        if (ledger_.remaining >= offer->weight) eligible = ledger_.remaining;
        own_ = ConsensusPair{ledger_.id, eligible};
        out.BroadcastToProcessors(own_);
      } else if (const auto* d = std::get_if<FinalDirective>(&m.payload)) {
        ledger_.Replace(d->item, d->weight);
      } else {
        throw ProtocolFault("unexpected " + ToString(m.payload));
      }
    }
  }

  const internal::ProcessorLedger& ledger() const { return ledger_; }

 private:
  void Decide(std::span<const Message> inbox, Outbox& out) {
    std::vector<bool> heard(n_ + 1, false);
    heard[ledger_.id] = true;
    ConsensusPair best = own_;
    for (const Message& m : inbox) {
      const auto* pair = std::get_if<ConsensusPair>(&m.payload);
      if (pair == nullptr || m.from.is_source() || pair->id != m.from.value ||
          heard[m.from.value]) {
        throw ProtocolFault("malformed consensus round at p" +
                            std::to_string(ledger_.id));
      }
      heard[m.from.value] = true;
      if (!pair->capacity) continue;
      if (!best.capacity || *pair->capacity > *best.capacity ||
          (*pair->capacity == *best.capacity && pair->id < best.id)) {
        best = *pair;
      }
    }
    if (static_cast<int>(inbox.size()) != n_ - 1) {
      throw ProtocolFault("p" + std::to_string(ledger_.id) +
                          " missed a capacity report");
    }
    if (best.capacity && best.id == ledger_.id) {
      out.Send(NodeId::Source(), Winner{ledger_.id});
      ledger_.Take(pending_->item, pending_->weight);
    }
    pending_.reset();
  }

  internal::ProcessorLedger ledger_;
  int n_;
  std::optional<WeightOffer> pending_;
  ConsensusPair own_;
};

}  // namespace

AlgorithmRun RunDistributedGreedy(const Instance& instance) {
  ValidateInstance(instance);
  const int n = instance.num_knapsacks();
  const Network network = Network::Build(n, /*with_tree=*/false);

  BroadcastSource source(instance);
  std::vector<std::unique_ptr<BroadcastProcessor>> owned;
  std::vector<NodeProgram*> processors;
  std::vector<const internal::ProcessorLedger*> ledgers;
  for (int j = 1; j <= n; ++j) {
    owned.push_back(
        std::make_unique<BroadcastProcessor>(j, instance.capacities[j - 1], n));
    processors.push_back(owned.back().get());
    ledgers.push_back(&owned.back()->ledger());
  }

  SimulationResult sim = RunProtocol(network, source, processors);
  internal::CheckLedgers(ledgers, source.assignment());

  AlgorithmRun run;
  run.algorithm = Algorithm::kDistributed;
  run.greedy = source.greedy();
  run.assignment = source.assignment();
  run.greedy_profit = Objective(run.greedy, instance);
  run.profit = Objective(run.assignment, instance);
  run.changed_knapsacks = source.changed();
  run.rounds = instance.num_items();
  run.metrics = std::move(sim.metrics);
  run.trace = std::move(sim.trace);
  return run;
}

}  // namespace dmkp
