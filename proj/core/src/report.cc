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

#include "dmkp/report.h"

#include <sstream>

#include "json.hpp"

namespace dmkp {
namespace {

const char* OracleLabel(OracleStatus status) {
  switch (status) {
    case OracleStatus::kNotRequested:
      return "not requested";
    case OracleStatus::kAvailable:
      return "ok";
    case OracleStatus::kUnavailable:
      return "oracle unavailable";
  }
  return "";
}

}  // namespace

std::string SerializeReports(std::span<const RunReport> reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const RunReport& r : reports) {
    nlohmann::ordered_json entry;
    entry["algorithm"] = r.algorithm;
    entry["instance_digest"] = r.instance_digest;
    entry["m"] = r.m;
    entry["n"] = r.n;
    entry["profit"] = r.profit;
    nlohmann::ordered_json placement = nlohmann::ordered_json::array();
    for (int j : r.placement) {
      if (j == kUnassigned) {
        placement.push_back(nullptr);
      } else {
        placement.push_back(j);
      }
    }
    entry["placement"] = std::move(placement);
    entry["messages"] = r.messages;
    entry["phases"] = r.phases;
    entry["rounds"] = r.rounds;
    entry["oracle"] = OracleLabel(r.oracle);
    if (r.optimum) entry["opt"] = *r.optimum;
    if (r.ratio) entry["ratio"] = r.ratio->ToString();
    if (r.bound_ok) entry["bound_ok"] = *r.bound_ok;
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string ReportsToCsv(std::span<const RunReport> reports) {
  std::ostringstream out;
  out << "algorithm,m,n,profit,opt,ratio_num,ratio_den,messages,phases,rounds\n";
  for (const RunReport& r : reports) {
    out << r.algorithm << ',' << r.m << ',' << r.n << ',' << r.profit << ',';
    if (r.optimum) out << *r.optimum;
    out << ',';
    if (r.ratio) out << r.ratio->num;
    out << ',';
    if (r.ratio) out << r.ratio->den;
    out << ',' << r.messages << ',' << r.phases << ',' << r.rounds << '\n';
  }
  return out.str();
}

}  // namespace dmkp
