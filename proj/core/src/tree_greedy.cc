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

// Per item, in density order, with h = floor(log2 n):
//   phase 1        S broadcasts <i, w_i> to every processor          (n)
//   phases 2..h+1  convergecast: a node at depth d forwards the best
//                  <id, cap> of its subtree to its parent h-d steps
//                  after the offer arrived                           (n-1)
//   phase h+2      root p_1 sends the winning id (or bot) to S      (1)
//   phase h+3      S confirms the item to the winner                 (0 or 1)
// A node's own capacity competes only when r_j >= w_i. Merges prefer the
// larger capacity, then the smaller id. Final directives for the last item
// travel in the same phase as its confirmation.

#include <memory>

#include "dmkp/algorithms.h"

namespace dmkp {
namespace {

class TreeSource final : public SourceProgram {
 public:
  TreeSource(const Instance& instance, int height)
      : instance_(instance),
        order_(SortByDensity(instance.items)),
        assignment_(Assignment::Empty(instance)),
        root_report_phase_(height + 2) {}

  void Step(std::span<const Message> inbox, Outbox& out) override {
    if (instance_.num_items() == 0) {
      halted_ = true;
      return;
    }
    if (cursor_ < 0) {
      Offer(0, out);
      return;
    }
    ++waited_;
    if (waited_ < root_report_phase_) {
      if (!inbox.empty()) throw ProtocolFault("source heard back too early");
      return;
    }
    if (waited_ == root_report_phase_) {
      if (inbox.size() != 1 || inbox[0].from != NodeId::Processor(1)) {
        throw ProtocolFault("source expected exactly one report from the root");
      }
      const auto* w = std::get_if<Winner>(&inbox[0].payload);
      if (w == nullptr) {
        throw ProtocolFault("unexpected " + ToString(inbox[0].payload));
      }
      if (w->processor) {
        assignment_.Place(instance_, order_[cursor_], *w->processor - 1);
        out.Send(NodeId::Processor(*w->processor), Winner{w->processor});
      }
      if (cursor_ + 1 == instance_.num_items()) {
        greedy_ = assignment_;
        final_ = FinalReassign(assignment_, instance_);
        assignment_ = final_.assignment;
        internal::SendFinalDirectives(final_, instance_, out);
      }
      return;
    }
    // Confirmation phase is over.
    if (!inbox.empty()) throw ProtocolFault("unexpected message at source");
    if (cursor_ + 1 < instance_.num_items()) {
      Offer(cursor_ + 1, out);
    } else {
      halted_ = true;
    }
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
  int root_report_phase_;
  int cursor_ = -1;
  int waited_ = 0;
  bool halted_ = false;
};

class TreeProcessor final : public NodeProgram {
 public:
  TreeProcessor(const Network& network, int id, int64_t capacity)
      : ledger_{id, capacity, capacity, {}},
        links_(network.tree(id)),
        wait_steps_(network.height() - TreeDepth(id)),
        expected_children_((links_.left ? 1 : 0) + (links_.right ? 1 : 0)) {}

  void Step(std::span<const Message> inbox, Outbox& out) override {
    for (const Message& m : inbox) {
      if (const auto* offer = std::get_if<WeightOffer>(&m.payload)) {
        RequireFromSource(m);
        if (pending_) throw ProtocolFault("offer during consensus");
        pending_ = *offer;
        best_ = ConsensusPair{ledger_.id, std::nullopt};
        if (ledger_.remaining >= offer->weight) best_.capacity = ledger_.remaining;
        heard_ = 0;
        steps_left_ = wait_steps_;
      } else if (const auto* pair = std::get_if<ConsensusPair>(&m.payload)) {
        const int from = m.from.value;
        if (!pending_ || m.from.is_source() ||
            (from != links_.left && from != links_.right)) {
          throw ProtocolFault("p" + std::to_string(ledger_.id) +
                              " got a consensus value from non-child " +
                              ToString(m.from));
        }
        ++heard_;
        Merge(*pair);
      } else if (const auto* w = std::get_if<Winner>(&m.payload)) {
        RequireFromSource(m);
        if (!awarded_ || w->processor != ledger_.id) {
          throw ProtocolFault("unexpected award at p" +
                              std::to_string(ledger_.id));
        }
        ledger_.Take(awarded_->item, awarded_->weight);
        awarded_.reset();
      } else if (const auto* d = std::get_if<FinalDirective>(&m.payload)) {
        RequireFromSource(m);
        ledger_.Replace(d->item, d->weight);
      } else {
        throw ProtocolFault("unexpected " + ToString(m.payload));
      }
    }

    if (!pending_) return;
    if (steps_left_-- > 0) return;

    if (heard_ != expected_children_) {
      throw ProtocolFault("p" + std::to_string(ledger_.id) +
                          " is missing a child's value");
    }
    if (links_.parent) {
      out.Send(NodeId::Processor(*links_.parent), best_);
    } else {
      std::optional<int> winner;
      if (best_.capacity) winner = best_.id;
      out.Send(NodeId::Source(), Winner{winner});
    }
    // Whoever wins keeps the item details to apply the award.
    awarded_ = *pending_;
    pending_.reset();
  }

  const internal::ProcessorLedger& ledger() const { return ledger_; }

 private:
  static void RequireFromSource(const Message& m) {
    if (!m.from.is_source()) {
      throw ProtocolFault("expected " + ToString(m.payload) + " from S");
    }
  }

  void Merge(const ConsensusPair& other) {
    if (!other.capacity) return;
    if (!best_.capacity || *other.capacity > *best_.capacity ||
        (*other.capacity == *best_.capacity && other.id < best_.id)) {
      best_ = other;
    }
  }

  internal::ProcessorLedger ledger_;
  TreeLinks links_;
  int wait_steps_;
  int expected_children_;
  std::optional<WeightOffer> pending_;
  std::optional<WeightOffer> awarded_;
  ConsensusPair best_;
  int heard_ = 0;
  int steps_left_ = 0;
};

}  // namespace

AlgorithmRun RunTreeGreedy(const Instance& instance) {
  ValidateInstance(instance);
  const int n = instance.num_knapsacks();
  const Network network = Network::Build(n, /*with_tree=*/true);

  TreeSource source(instance, network.height());
  std::vector<std::unique_ptr<TreeProcessor>> owned;
  std::vector<NodeProgram*> processors;
  std::vector<const internal::ProcessorLedger*> ledgers;
  for (int j = 1; j <= n; ++j) {
    owned.push_back(
        std::make_unique<TreeProcessor>(network, j, instance.capacities[j - 1]));
    processors.push_back(owned.back().get());
    ledgers.push_back(&owned.back()->ledger());
  }

  SimulationResult sim = RunProtocol(network, source, processors);
  internal::CheckLedgers(ledgers, source.assignment());

  AlgorithmRun run;
  run.algorithm = Algorithm::kTree;
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
