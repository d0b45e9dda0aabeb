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

#include "dmkp/experiment.h"

#include <algorithm>

#include "dmkp/instance_io.h"

namespace dmkp {
namespace {

int64_t CeilDiv(int64_t a, int64_t b) { return (a + b - 1) / b; }

}  // namespace

RunReport MakeReport(const AlgorithmRun& run, const Instance& instance,
                     const std::optional<OptimalSolution>* oracle) {
  RunReport report;
  report.algorithm = std::string(AlgorithmName(run.algorithm));
  report.instance_digest = InstanceDigest(instance);
  report.m = instance.num_items();
  report.n = instance.num_knapsacks();
  report.profit = run.profit;
  report.placement = run.assignment.placement;
  report.messages = run.metrics.messages;
  report.phases = run.metrics.phases;
  report.rounds = run.rounds;
  if (oracle == nullptr) return report;
  if (!oracle->has_value()) {
    report.oracle = OracleStatus::kUnavailable;
    return report;
  }
  const int64_t optimum = (*oracle)->optimum;
  report.oracle = OracleStatus::kAvailable;
  report.optimum = optimum;
  report.ratio = ApproxRatio(run.profit, optimum);
  report.bound_ok = BoundHolds(run.profit, optimum, instance.num_knapsacks());
  return report;
}

std::vector<RunReport> RunExperiment(const Instance& instance,
                                     std::span<const Algorithm> algorithms,
                                     bool with_oracle,
                                     const OracleOptions& options) {
  ValidateInstance(instance);
  std::optional<OptimalSolution> optimum;
  if (with_oracle) optimum = ExactOptimum(instance, options);

  std::vector<RunReport> reports;
  for (Algorithm a : kAllAlgorithms) {
    if (std::find(algorithms.begin(), algorithms.end(), a) == algorithms.end()) {
      continue;
    }
    reports.push_back(MakeReport(RunAlgorithm(a, instance), instance,
                                 with_oracle ? &optimum : nullptr));
  }
  return reports;
}

InstanceCheck CheckInstance(const Instance& instance,
                            const OracleOptions& options) {
  ValidateInstance(instance);
  InstanceCheck check;
  auto fail = [&](std::string what) { check.failures.push_back(std::move(what)); };

  const int64_t m = instance.num_items();
  const int64_t n = instance.num_knapsacks();

  std::vector<AlgorithmRun> runs;
  for (Algorithm a : kAllAlgorithms) {
    try {
      runs.push_back(RunAlgorithm(a, instance));
    } catch (const std::exception& e) {
      fail(std::string(AlgorithmName(a)) + ": run aborted: " + e.what());
      return check;
    }
  }
  const AlgorithmRun& simple = runs[0];
  const AlgorithmRun& modified = runs[1];
  const AlgorithmRun& dist = runs[2];
  const AlgorithmRun& tree = runs[3];

  for (const AlgorithmRun& run : runs) {
    const std::string name(AlgorithmName(run.algorithm));
    if (auto v = CheckFeasible(run.greedy, instance)) {
      fail(name + ": infeasible before Final: " + v->message);
    }
    if (auto v = CheckFeasible(run.assignment, instance)) {
      fail(name + ": infeasible: " + v->message);
    }
    if (run.profit < run.greedy_profit) fail(name + ": Final lowered profit");
  }

  if (dist.assignment != tree.assignment || dist.greedy != tree.greedy) {
    fail("dist and tree placements differ");
  }
  const Solution strict = StrictSequentialGreedy(instance);
  if (dist.greedy_profit != strict.profit ||
      tree.greedy_profit != strict.profit) {
    fail("dist/tree pre-Final profit differs from the sequential greedy");
  }
  if (simple.assignment != BatchRoundGreedy(instance).assignment) {
    fail("simple placement differs from the batch-round greedy");
  }
  if (modified.greedy != simple.assignment) {
    fail("modified greedy stage differs from simple");
  }
  const FinalOutcome central = FinalReassign(dist.greedy, instance);
  if (central.assignment != dist.assignment) {
    fail("dist Final differs from the centralized Final");
  }

  // Message and phase accounting.
  const int64_t rounds = CeilDiv(m, n);
  if (simple.rounds != rounds) fail("simple: rounds != ceil(m/n)");
  if (simple.metrics.messages != 2 * n * rounds ||
      simple.metrics.messages > 2 * m + 2 * n) {
    fail("simple: message count " + std::to_string(simple.metrics.messages));
  }
  if (simple.metrics.phases != 2 * rounds) fail("simple: phase count");

  const int64_t placed = std::count_if(
      dist.greedy.placement.begin(), dist.greedy.placement.end(),
      [](int j) { return j != kUnassigned; });
  const auto changed = static_cast<int64_t>(dist.changed_knapsacks.size());
  if (dist.metrics.messages != m * n * n + placed + changed ||
      dist.metrics.messages > m * (n + n * n) + n) {
    fail("dist: message count " + std::to_string(dist.metrics.messages));
  }
  if (dist.metrics.phases != 3 * m + (changed > 0 ? 1 : 0)) {
    fail("dist: phase count " + std::to_string(dist.metrics.phases));
  }
  const int64_t height = TreeDepth(static_cast<int>(n));
  if (tree.metrics.messages != 2 * m * n + placed + changed ||
      tree.metrics.messages > 2 * m * n + m + n) {
    fail("tree: message count " + std::to_string(tree.metrics.messages));
  }
  if (tree.metrics.phases != m * (height + 3)) {
    fail("tree: phase count " + std::to_string(tree.metrics.phases));
  }

  for (const AlgorithmRun* run : {&dist, &tree}) {
    if (auto failure = AuditGreedySteps(run->trace, instance, run->algorithm)) {
      fail(std::string(AlgorithmName(run->algorithm)) + ": " + *failure);
    }
  }

  const std::optional<OptimalSolution> optimum = ExactOptimum(instance, options);
  check.oracle_available = optimum.has_value();
  if (optimum) {
    for (const AlgorithmRun* run : {&modified, &dist, &tree}) {
      if (run->profit > optimum->optimum) {
        fail(std::string(AlgorithmName(run->algorithm)) + ": beats the optimum");
      }
      if (!BoundHolds(run->profit, optimum->optimum, static_cast<int>(n))) {
        fail(std::string(AlgorithmName(run->algorithm)) + ": profit " +
             std::to_string(run->profit) + " below OPT/(n+1), OPT=" +
             std::to_string(optimum->optimum));
      }
    }
  }
  return check;
}

SweepSummary VerifySweep(const SweepParams& params,
                         const OracleOptions& options) {
  if (params.m_min < 0 || params.m_max < params.m_min || params.n_min < 1 ||
      params.n_max < params.n_min || params.seeds < 0) {
    throw std::invalid_argument("empty or invalid sweep range");
  }
  SweepSummary summary;
  for (int m = params.m_min; m <= params.m_max; ++m) {
    for (int n = params.n_min; n <= params.n_max; ++n) {
      for (int s = 0; s < params.seeds; ++s) {
        GenParams gen = params.ranges;
        gen.m = m;
        gen.n = n;
        gen.seed = params.ranges.seed + static_cast<uint64_t>(s);
        const InstanceCheck check = CheckInstance(GenRandom(gen), options);
        ++summary.instances;
        if (!check.oracle_available) ++summary.oracle_unavailable;
        for (const std::string& f : check.failures) {
          summary.failures.push_back("m=" + std::to_string(m) +
                                     " n=" + std::to_string(n) +
                                     " seed=" + std::to_string(gen.seed) +
                                     ": " + f);
        }
      }
    }
  }
  return summary;
}

}  // namespace dmkp
