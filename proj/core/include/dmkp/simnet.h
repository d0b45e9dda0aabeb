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

#ifndef DMKP_SIMNET_H_
#define DMKP_SIMNET_H_

// Deterministic synchronous message-passing engine.
//
// The network holds a distinguished source S and processors p_1..p_n. All
// processors are pairwise connected and each is connected to S. Execution
// proceeds in phases: every message sent while stepping phase t is delivered
// (and counted) in phase t+1, so nothing is readable in the phase it was
// sent. Deliveries within a phase are ordered by (sender, receiver), keeping
// emission order for equal pairs.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dmkp {

// A message was addressed to a node or link that does not exist, or a run
// failed to terminate.
class SimulationFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// 0 is the source; j >= 1 is processor p_j.
struct NodeId {
  int value = 0;

  static constexpr NodeId Source() { return NodeId{0}; }
  static constexpr NodeId Processor(int j) { return NodeId{j}; }
  constexpr bool is_source() const { return value == 0; }

  friend constexpr auto operator<=>(const NodeId&, const NodeId&) = default;
};
std::string ToString(NodeId node);

// Payloads. std::nullopt fields encode the bottom value.
struct CapacityReport {
  int64_t remaining = 0;
  friend bool operator==(const CapacityReport&, const CapacityReport&) = default;
};
struct ItemOffer {
  int item = 0;
  int64_t cost = 0;
  int64_t weight = 0;
  friend bool operator==(const ItemOffer&, const ItemOffer&) = default;
};
struct WeightOffer {
  int item = 0;
  int64_t weight = 0;
  friend bool operator==(const WeightOffer&, const WeightOffer&) = default;
};
struct Bottom {
  friend bool operator==(const Bottom&, const Bottom&) = default;
};
struct ConsensusPair {
  int id = 0;
  std::optional<int64_t> capacity;
  friend bool operator==(const ConsensusPair&, const ConsensusPair&) = default;
};
struct Winner {
  std::optional<int> processor;
  friend bool operator==(const Winner&, const Winner&) = default;
};
// Replaces the receiver's contents with the single given item.
struct FinalDirective {
  int item = 0;
  int64_t weight = 0;
  friend bool operator==(const FinalDirective&, const FinalDirective&) = default;
};

using Payload = std::variant<CapacityReport, ItemOffer, WeightOffer, Bottom,
                             ConsensusPair, Winner, FinalDirective>;
std::string ToString(const Payload& payload);

struct Message {
  NodeId from;
  NodeId to;
  Payload payload;
  friend bool operator==(const Message&, const Message&) = default;
};

struct TreeLinks {
  std::optional<int> parent;
  std::optional<int> left;
  std::optional<int> right;
  friend bool operator==(const TreeLinks&, const TreeLinks&) = default;
};

// Heap-shaped binary tree over p_1..p_n: parent floor(j/2), children 2j and
// 2j+1 when they exist. Throws std::out_of_range unless 1 <= j <= n.
TreeLinks ComputeTreeLinks(int j, int n);

// floor(log2 j), the depth of p_j in the tree.
int TreeDepth(int j);

class Network {
 public:
  // Throws std::invalid_argument for n < 1.
  static Network Build(int n, bool with_tree);

  int size() const { return n_; }
  bool has_tree() const { return !tree_.empty(); }
  // Depth of the deepest processor, floor(log2 n).
  int height() const { return TreeDepth(n_); }
  const TreeLinks& tree(int j) const;

  bool HasNode(NodeId node) const;
  // Complete graph over processors plus S <-> p_j; no self links.
  bool HasLink(NodeId from, NodeId to) const;

 private:
  explicit Network(int n) : n_(n) {}

  int n_;
  std::vector<TreeLinks> tree_;  // index j-1
};

class Outbox {
 public:
  Outbox(const Network& network, NodeId self) : network_(&network), self_(self) {}

  // Throws SimulationFault if the link does not exist.
  void Send(NodeId to, Payload payload);
  // One message to every processor other than the sender.
  void BroadcastToProcessors(const Payload& payload);

  NodeId self() const { return self_; }
  std::vector<Message>& messages() { return messages_; }

 private:
  const Network* network_;
  NodeId self_;
  std::vector<Message> messages_;
};

// A node's behaviour: a deterministic step from (local state, inbox) to
// (local state, outbox). Step is called once at start-up with an empty inbox
// and then once per phase, including phases in which nothing arrived.
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual void Step(std::span<const Message> inbox, Outbox& out) = 0;
};

class SourceProgram : public NodeProgram {
 public:
  // Once true, the source is no longer stepped; the run ends when no
  // messages remain in flight.
  virtual bool Halted() const = 0;
};

struct PhaseRecord {
  int64_t phase = 0;
  std::vector<Message> deliveries;
  friend bool operator==(const PhaseRecord&, const PhaseRecord&) = default;
};

// Every phase in order, silent phases included.
struct Trace {
  std::vector<PhaseRecord> phases;
  friend bool operator==(const Trace&, const Trace&) = default;
};

struct RunMetrics {
  int64_t messages = 0;
  int64_t phases = 0;
  std::vector<int64_t> per_phase;  // deliveries in each phase
  friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

RunMetrics MetricsOf(const Trace& trace);

// One delivery per line: "<phase> <from> <to> <payload>\n".
std::string DumpTrace(const Trace& trace);

struct SimulationResult {
  Trace trace;
  RunMetrics metrics;
};

inline constexpr int64_t kDefaultMaxPhases = int64_t{1} << 26;

// Runs until the source halts and no message is in flight. processors[j-1]
// is the program of p_j; its size must equal network.size().
SimulationResult RunProtocol(const Network& network, SourceProgram& source,
                             std::span<NodeProgram* const> processors,
                             int64_t max_phases = kDefaultMaxPhases);

}  // namespace dmkp

#endif  // DMKP_SIMNET_H_
