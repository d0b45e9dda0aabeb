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

#include "cli.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dmkp/algorithms.h"
#include "dmkp/experiment.h"
#include "dmkp/generator.h"
#include "dmkp/instance_io.h"
#include "dmkp/report.h"

namespace dmkp::cli {
namespace {

// Bad input detected after parsing; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void WriteOutput(const std::string& text, const std::string& path,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

Instance ReadInstance(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw UsageError("instance file not found: " + path);
  }
  return LoadInstance(path);
}

std::vector<Algorithm> ParseAlgorithmList(const std::vector<std::string>& names) {
  std::vector<Algorithm> algorithms;
  for (const std::string& name : names) {
    const auto a = ParseAlgorithm(name);
    if (!a) throw UsageError("unknown algorithm '" + name + "'");
    algorithms.push_back(*a);
  }
  return algorithms;
}

int ParseInt(std::string_view text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("bad integer in " + what + ": '" + std::string(text) + "'");
  }
  return value;
}

// "m=1..10" or "n=3".
void ParseSweepRange(const std::string& text, SweepParams& sweep) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("sweep range needs '=': " + text);
  const std::string key = text.substr(0, eq);
  const std::string range = text.substr(eq + 1);
  int lo = 0;
  int hi = 0;
  if (const auto dots = range.find(".."); dots != std::string::npos) {
    lo = ParseInt(std::string_view(range).substr(0, dots), text);
    hi = ParseInt(std::string_view(range).substr(dots + 2), text);
  } else {
    lo = hi = ParseInt(range, text);
  }
  if (key == "m") {
    sweep.m_min = lo;
    sweep.m_max = hi;
  } else if (key == "n") {
    sweep.n_min = lo;
    sweep.n_max = hi;
  } else {
    throw UsageError("sweep ranges are m=... and n=..., got " + text);
  }
}

void AddRangeOptions(CLI::App& cmd, GenParams& p) {
  cmd.add_option("--cost-max", p.cost_max, "Costs drawn from [1, cost-max]")
      ->capture_default_str();
  cmd.add_option("--weight-max", p.weight_max, "Weights drawn from [1, weight-max]")
      ->capture_default_str();
  cmd.add_option("--capacity-min", p.capacity_min, "Smallest capacity")
      ->capture_default_str();
  cmd.add_option("--capacity-max", p.capacity_max, "Largest capacity")
      ->capture_default_str();
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Distributed greedy algorithms for the Multiple Knapsack Problem",
               "dmkp"};
  app.require_subcommand(1);

  // gen-random
  GenParams gen;
  std::string gen_out;
  CLI::App* gen_random =
      app.add_subcommand("gen-random", "Write a random instance");
  gen_random->add_option("--m", gen.m, "Number of items")->required();
  gen_random->add_option("--n", gen.n, "Number of knapsacks")->required();
  AddRangeOptions(*gen_random, gen);
  gen_random->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gen_random->add_option("--out", gen_out, "Output path (default: stdout)");

  // gen-adversarial
  int adv_n = 0;
  int64_t adv_w = 0;
  std::string adv_out;
  CLI::App* gen_adv = app.add_subcommand(
      "gen-adversarial", "Write the worst-case family for plain greedy");
  gen_adv->add_option("--n", adv_n, "Number of knapsacks")->required();
  gen_adv->add_option("--W", adv_w, "Common capacity (>= 3)")->required();
  gen_adv->add_option("--out", adv_out, "Output path (default: stdout)");

  // run
  std::string run_alg;
  std::string run_instance;
  std::string run_report;
  std::string run_trace;
  bool run_oracle = false;
  CLI::App* run = app.add_subcommand("run", "Run one algorithm on an instance");
  run->add_option("--alg", run_alg, "simple | modified | dist | tree")
      ->required()
      ->check(CLI::IsMember({"simple", "modified", "dist", "tree"}));
  run->add_option("--instance", run_instance, "Instance file")->required();
  run->add_option("--report", run_report, "Report path (default: stdout)");
  run->add_option("--trace", run_trace, "Also write the message trace here");
  run->add_flag("--oracle", run_oracle, "Attach the exact optimum and ratio");

  // compare
  std::string cmp_instance;
  std::vector<std::string> cmp_algs = {"simple", "modified", "dist", "tree"};
  bool cmp_oracle = false;
  CLI::App* compare =
      app.add_subcommand("compare", "Run several algorithms; CSV to stdout");
  compare->add_option("--instance", cmp_instance, "Instance file")->required();
  compare->add_option("--algs", cmp_algs, "Comma-separated algorithm list")
      ->delimiter(',')
      ->capture_default_str();
  compare->add_flag("--oracle", cmp_oracle, "Include the exact optimum");

  // verify
  std::string verify_instance;
  std::vector<std::string> verify_sweep;
  SweepParams sweep;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check every invariant on one instance or a random sweep");
  auto* verify_inst_opt =
      verify->add_option("--instance", verify_instance, "Instance file");
  auto* verify_sweep_opt =
      verify->add_option("--sweep", verify_sweep, "Ranges, e.g. m=1..10 n=1..4")
          ->expected(1, 2);
  verify_inst_opt->excludes(verify_sweep_opt);
  verify->add_option("--seeds", sweep.seeds, "Seeds per (m, n)")->capture_default_str();
  verify->add_option("--seed-base", sweep.ranges.seed, "First seed")
      ->capture_default_str();
  AddRangeOptions(*verify, sweep.ranges);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("dmkp");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen_random->parsed()) {
      WriteOutput(SerializeInstance(GenRandom(gen)), gen_out, out);
      return kExitOk;
    }
    if (gen_adv->parsed()) {
      WriteOutput(SerializeInstance(GenAdversarial(adv_n, adv_w)), adv_out, out);
      return kExitOk;
    }
    if (run->parsed()) {
      const Instance instance = ReadInstance(run_instance);
      const Algorithm algorithm = *ParseAlgorithm(run_alg);
      const AlgorithmRun result = RunAlgorithm(algorithm, instance);
      std::optional<OptimalSolution> optimum;
      if (run_oracle) optimum = ExactOptimum(instance);
      const RunReport report =
          MakeReport(result, instance, run_oracle ? &optimum : nullptr);
      WriteOutput(SerializeReports({&report, 1}), run_report, out);
      if (!run_trace.empty()) WriteOutput(DumpTrace(result.trace), run_trace, out);
      return kExitOk;
    }
    if (compare->parsed()) {
      const Instance instance = ReadInstance(cmp_instance);
      const std::vector<Algorithm> algorithms = ParseAlgorithmList(cmp_algs);
      out << ReportsToCsv(RunExperiment(instance, algorithms, cmp_oracle));
      return kExitOk;
    }
    if (verify->parsed()) {
      if (!verify_instance.empty()) {
        const InstanceCheck check = CheckInstance(ReadInstance(verify_instance));
        for (const std::string& f : check.failures) err << "FAIL " << f << '\n';
        out << "verified 1 instance, oracle "
            << (check.oracle_available ? "ok" : "unavailable") << ", "
            << check.failures.size() << " failure(s)\n";
        return check.failures.empty() ? kExitOk : kExitViolation;
      }
      if (verify_sweep.empty()) {
        throw UsageError("verify needs --instance or --sweep");
      }
      for (const std::string& range : verify_sweep) ParseSweepRange(range, sweep);
      const SweepSummary summary = VerifySweep(sweep);
      for (const std::string& f : summary.failures) err << "FAIL " << f << '\n';
      out << "verified " << summary.instances << " instances, oracle unavailable on "
          << summary.oracle_unavailable << ", " << summary.failures.size()
          << " failure(s)\n";
      return summary.ok() ? kExitOk : kExitViolation;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // includes InvalidInstance
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace dmkp::cli
