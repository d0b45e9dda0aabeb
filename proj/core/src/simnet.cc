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

#include "dmkp/simnet.h"

#include <algorithm>
#include <bit>
#include <sstream>

namespace dmkp {
namespace {

std::string OrBottom(const std::optional<int64_t>& value) {
  return value ? std::to_string(*value) : "bot";
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string ToString(NodeId node) {
  return node.is_source() ? "S" : "p" + std::to_string(node.value);
}

std::string ToString(const Payload& payload) {
  return std::visit(
      Overloaded{
          [](const CapacityReport& p) {
            return "cap(" + std::to_string(p.remaining) + ")";
          },
          [](const ItemOffer& p) {
            return "offer(" + std::to_string(p.item) + "," +
                   std::to_string(p.cost) + "," + std::to_string(p.weight) +
                   ")";
          },
          [](const WeightOffer& p) {
            return "weight(" + std::to_string(p.item) + "," +
                   std::to_string(p.weight) + ")";
          },
          [](const Bottom&) { return std::string("bot"); },
          [](const ConsensusPair& p) {
            return "pair(" + std::to_string(p.id) + "," + OrBottom(p.capacity) +
                   ")";
          },
          [](const Winner& p) {
            return "winner(" +
                   (p.processor ? std::to_string(*p.processor) : "bot") + ")";
          },
          [](const FinalDirective& p) {
            return "final(" + std::to_string(p.item) + "," +
                   std::to_string(p.weight) + ")";
          },
      },
      payload);
}

int TreeDepth(int j) {
  return static_cast<int>(std::bit_width(static_cast<unsigned>(j))) - 1;
}

TreeLinks ComputeTreeLinks(int j, int n) {
  if (j < 1 || j > n) {
    throw std::out_of_range("processor " + std::to_string(j) +
                            " outside 1.." + std::to_string(n));
  }
  TreeLinks links;
  if (j > 1) links.parent = j / 2;
  // 2j+1 computed in 64 bits so large n cannot overflow.
  const int64_t left = int64_t{2} * j;
  if (left <= n) links.left = static_cast<int>(left);
  if (left + 1 <= n) links.right = static_cast<int>(left + 1);
  return links;
}

Network Network::Build(int n, bool with_tree) {
  if (n < 1) {
    throw std::invalid_argument("network needs at least one processor");
  }
  Network network(n);
  if (with_tree) {
    network.tree_.reserve(n);
    for (int j = 1; j <= n; ++j) network.tree_.push_back(ComputeTreeLinks(j, n));
  }
  return network;
}

const TreeLinks& Network::tree(int j) const {
  if (tree_.empty()) throw std::logic_error("network built without tree");
  if (j < 1 || j > n_) throw std::out_of_range("no processor " + std::to_string(j));
  return tree_[j - 1];
}

bool Network::HasNode(NodeId node) const {
  return node.value >= 0 && node.value <= n_;
}

bool Network::HasLink(NodeId from, NodeId to) const {
  return HasNode(from) && HasNode(to) && from != to;
}

void Outbox::Send(NodeId to, Payload payload) {
  if (!network_->HasLink(self_, to)) {
    throw SimulationFault("no link " + ToString(self_) + " -> " + ToString(to));
  }
  messages_.push_back(Message{self_, to, std::move(payload)});
}

void Outbox::BroadcastToProcessors(const Payload& payload) {
  for (int j = 1; j <= network_->size(); ++j) {
    const NodeId to = NodeId::Processor(j);
    if (to != self_) Send(to, payload);
  }
}

RunMetrics MetricsOf(const Trace& trace) {
  RunMetrics metrics;
  metrics.phases = static_cast<int64_t>(trace.phases.size());
  metrics.per_phase.reserve(trace.phases.size());
  for (const PhaseRecord& record : trace.phases) {
    const auto count = static_cast<int64_t>(record.deliveries.size());
    metrics.per_phase.push_back(count);
    metrics.messages += count;
  }
  return metrics;
}

std::string DumpTrace(const Trace& trace) {
  std::ostringstream out;
  for (const PhaseRecord& record : trace.phases) {
    for (const Message& m : record.deliveries) {
      out << record.phase << ' ' << ToString(m.from) << ' ' << ToString(m.to)
          << ' ' << ToString(m.payload) << '\n';
    }
  }
  return out.str();
}

SimulationResult RunProtocol(const Network& network, SourceProgram& source,
                             std::span<NodeProgram* const> processors,
                             int64_t max_phases) {
  const int n = network.size();
  if (static_cast<int>(processors.size()) != n) {
    throw SimulationFault("expected " + std::to_string(n) +
                          " processor programs, got " +
                          std::to_string(processors.size()));
  }

  std::vector<std::vector<Message>> inboxes(n + 1);
  std::vector<Message> in_flight;

  auto step_all = [&] {
    in_flight.clear();
    auto step = [&](NodeProgram& program, NodeId self) {
      Outbox out(network, self);
      program.Step(inboxes[self.value], out);
      for (Message& m : out.messages()) in_flight.push_back(std::move(m));
    };
    if (!source.Halted()) step(source, NodeId::Source());
    for (int j = 1; j <= n; ++j) step(*processors[j - 1], NodeId::Processor(j));
  };

  SimulationResult result;
  step_all();
  int64_t phase = 0;
  while (!source.Halted() || !in_flight.empty()) {
    if (phase >= max_phases) {
      throw SimulationFault("protocol did not terminate within " +
                            std::to_string(max_phases) + " phases");
    }
    ++phase;
    std::stable_sort(in_flight.begin(), in_flight.end(),
                     [](const Message& a, const Message& b) {
                       if (a.from != b.from) return a.from < b.from;
                       return a.to < b.to;
                     });
    for (auto& inbox : inboxes) inbox.clear();
    for (const Message& m : in_flight) inboxes[m.to.value].push_back(m);
    result.trace.phases.push_back(PhaseRecord{phase, in_flight});
    step_all();
  }
  result.metrics = MetricsOf(result.trace);
  return result;
}

}  // namespace dmkp
