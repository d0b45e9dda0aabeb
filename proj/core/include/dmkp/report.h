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

#ifndef DMKP_REPORT_H_
#define DMKP_REPORT_H_

#include <span>
#include <string>

#include "dmkp/experiment.h"

namespace dmkp {

// JSON list of report objects with a fixed key order:
//   algorithm, instance_digest, m, n, profit, placement, messages, phases,
//   rounds, oracle ("not requested" | "ok" | "oracle unavailable"),
//   and, only when the oracle answered, opt, ratio ("num/den"), bound_ok.
// Unassigned items appear as null in `placement`.
std::string SerializeReports(std::span<const RunReport> reports);

// CSV with header
//   algorithm,m,n,profit,opt,ratio_num,ratio_den,messages,phases,rounds
// Oracle columns are empty when no optimum is available.
std::string ReportsToCsv(std::span<const RunReport> reports);

}  // namespace dmkp

#endif  // DMKP_REPORT_H_
