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

#ifndef DMKP_EXPERIMENT_H_
#define DMKP_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmkp/algorithms.h"
#include "dmkp/generator.h"
#include "dmkp/instance.h"
#include "dmkp/oracle.h"

namespace dmkp {

enum class OracleStatus { kNotRequested, kAvailable, kUnavailable };

struct RunReport {
  std::string algorithm;
  std::string instance_digest;
  int m = 0;
  int n = 0;
  int64_t profit = 0;
  std::vector<int> placement;  // knapsack index or kUnassigned
  int64_t messages = 0;
  int64_t phases = 0;
  int64_t rounds = 0;
  OracleStatus oracle = OracleStatus::kNotRequested;
  // Present exactly when oracle == kAvailable.
  std::optional<int64_t> optimum;
  std::optional<Rational> ratio;
  std::optional<bool> bound_ok;
};

RunReport MakeReport(const AlgorithmRun& run, const Instance& instance,
                     const std::optional<OptimalSolution>* oracle);

// Runs each requested algorithm once, in kAllAlgorithms order regardless of
// the order given, attaching oracle data when requested. The oracle is solved
// at most once per call.
std::vector<RunReport> RunExperiment(const Instance& instance,
                                     std::span<const Algorithm> algorithms,
                                     bool with_oracle,
                                     const OracleOptions& options = {});

struct InstanceCheck {
  bool oracle_available = false;
  std::vector<std::string> failures;
};

// Every property the library promises, on one instance: feasibility before
// and after Final, dist/tree equivalence, agreement with the centralized
// greedy restatements, Final monotonicity, the 1/(n+1) bound against the
// oracle, the message and phase counts, and the greedy-step trace audit.
InstanceCheck CheckInstance(const Instance& instance,
                            const OracleOptions& options = {});

struct SweepParams {
  int m_min = 1;
  int m_max = 10;
  int n_min = 1;
  int n_max = 4;
  int seeds = 100;
  GenParams ranges;  // m, n, seed are overwritten per instance
};

struct SweepSummary {
  int64_t instances = 0;
  int64_t oracle_unavailable = 0;
  std::vector<std::string> failures;  // prefixed with the instance parameters
  bool ok() const { return failures.empty(); }
};

// Instance (m, n, s) uses seed = ranges.seed + s for s in [0, seeds).
SweepSummary VerifySweep(const SweepParams& params,
                         const OracleOptions& options = {});

}  // namespace dmkp

#endif  // DMKP_EXPERIMENT_H_
