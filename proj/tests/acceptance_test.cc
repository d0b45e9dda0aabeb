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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are exact (integer and rational comparisons only).

#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "dmkp/algorithms.h"
#include "dmkp/generator.h"
#include "dmkp/oracle.h"

namespace dmkp {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few failure details for a criterion.
class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void Check(bool ok, const std::string& detail) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (details_.size() < 16) details_.push_back(detail);
  }

  bool passed() const { return failures_ == 0; }

  bool Report(const std::string& summary) const {
    std::cout << (passed() ? "PASS " : "FAIL ") << name_ << ": " << summary
              << " (" << checks_ << " checks, " << failures_ << " failed)\n";
    for (const std::string& d : details_) std::cout << "    " << d << '\n';
    return passed();
  }

 private:
  std::string name_;
  int64_t checks_ = 0;
  int64_t failures_ = 0;
  std::vector<std::string> details_;
};

std::string Describe(int m, int n, uint64_t seed) {
  std::ostringstream s;
  s << "m=" << m << " n=" << n << " seed=" << seed;
  return s.str();
}

bool WorstCaseFamily() {
  Criterion c("1 worst-case family");
  const auto start = Clock::now();
  for (int n : {1, 2, 4, 8}) {
    for (int64_t w : {3, 10, 100}) {
      const Instance inst = GenAdversarial(n, w);
      const std::string at = "n=" + std::to_string(n) + " W=" + std::to_string(w);
      const AlgorithmRun simple = RunSimpleGreedy(inst);
      const AlgorithmRun modified = RunModifiedGreedy(inst);
      const auto opt = ExactOptimum(inst);
      c.Check(simple.profit == 2 * n, at + ": simple profit " + std::to_string(simple.profit));
      c.Check(opt.has_value(), at + ": oracle unavailable");
      if (!opt) continue;
      c.Check(opt->optimum == n * w, at + ": OPT " + std::to_string(opt->optimum) +
                                         ", expected nW = " + std::to_string(n * w));
      const Rational ratio = ApproxRatio(simple.profit, opt->optimum);
      c.Check(ratio == Rational::Of(2, w), at + ": simple ratio " + ratio.ToString() +
                                              ", expected " + Rational::Of(2, w).ToString());
      c.Check(modified.profit == n * w,
              at + ": modified profit " + std::to_string(modified.profit));
      const Rational modified_ratio = ApproxRatio(modified.profit, opt->optimum);
      c.Check(modified_ratio == Rational{1, 1},
              at + ": modified ratio " + modified_ratio.ToString() + ", expected 1/1");
    }
  }
  const double seconds = SecondsSince(start);
  c.Check(seconds < 1.0, "runtime " + std::to_string(seconds) + " s");
  std::ostringstream summary;
  summary << "n in {1,2,4,8}, W in {3,10,100}, " << seconds << " s";
  return c.Report(summary.str());
}

struct SweepEntry {
  Instance instance;
  std::string label;
  std::optional<OptimalSolution> optimum;
  AlgorithmRun simple, modified, dist, tree;
};

// m in [1, 10], n in [1, 4], 25 seeds each: 1000 instances with costs and
// weights drawn from [1, 50].
std::vector<SweepEntry> RunSweep(double& seconds) {
  const auto start = Clock::now();
  std::vector<SweepEntry> entries;
  for (int m = 1; m <= 10; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (uint64_t s = 0; s < 25; ++s) {
        const uint64_t seed = 1000 * m + 100 * n + s;
        SweepEntry e;
        e.instance = GenRandom({m, n, 50, 50, 1, 100, seed});
        e.label = Describe(m, n, seed);
        e.optimum = ExactOptimum(e.instance);
        e.simple = RunSimpleGreedy(e.instance);
        e.modified = RunModifiedGreedy(e.instance);
        e.dist = RunDistributedGreedy(e.instance);
        e.tree = RunTreeGreedy(e.instance);
        entries.push_back(std::move(e));
      }
    }
  }
  seconds = SecondsSince(start);
  return entries;
}

bool ApproximationBound(const std::vector<SweepEntry>& sweep, double seconds) {
  Criterion c("2 approximation bound");
  c.Check(sweep.size() >= 1000, "only " + std::to_string(sweep.size()) + " instances");
  for (const SweepEntry& e : sweep) {
    c.Check(e.optimum.has_value(), e.label + ": oracle unavailable");
    if (!e.optimum) continue;
    const int n = e.instance.num_knapsacks();
    const int64_t opt = e.optimum->optimum;
    for (const AlgorithmRun* run : {&e.modified, &e.dist, &e.tree}) {
      c.Check(run->profit * (n + 1) >= opt,
              e.label + ": " + std::string(AlgorithmName(run->algorithm)) + " profit " +
                  std::to_string(run->profit) + " vs OPT " + std::to_string(opt));
    }
  }
  c.Check(seconds < 120.0, "runtime " + std::to_string(seconds) + " s");
  std::ostringstream summary;
  summary << sweep.size() << " instances, profit*(n+1) >= OPT for modified/dist/tree, "
          << seconds << " s";
  return c.Report(summary.str());
}

bool MessageCounts(const std::vector<SweepEntry>& sweep) {
  Criterion c("3 message and phase counts");
  for (const SweepEntry& e : sweep) {
    const int64_t m = e.instance.num_items();
    const int64_t n = e.instance.num_knapsacks();
    const int64_t h = std::bit_width(static_cast<uint64_t>(n)) - 1;
    c.Check(e.simple.metrics.messages <= 2 * m + 2 * n,
            e.label + ": simple messages " + std::to_string(e.simple.metrics.messages));
    c.Check(e.simple.rounds == (m + n - 1) / n,
            e.label + ": simple rounds " + std::to_string(e.simple.rounds));
    c.Check(e.dist.metrics.messages <= m * (n + n * n) + n,
            e.label + ": dist messages " + std::to_string(e.dist.metrics.messages));
    c.Check(e.tree.metrics.messages <= 2 * m * n + m + n,
            e.label + ": tree messages " + std::to_string(e.tree.metrics.messages));
    if (n >= 2) {
      c.Check(e.tree.metrics.phases == m * (h + 3),
              e.label + ": tree phases " + std::to_string(e.tree.metrics.phases));
    }
  }
  return c.Report(
      "simple <= 2m+2n with ceil(m/n) rounds, dist <= m(n+n^2)+n, "
      "tree <= 2mn+m+n with m(floor(log2 n)+3) phases");
}

bool Equivalences(const std::vector<SweepEntry>& sweep) {
  Criterion c("4 equivalences");
  for (const SweepEntry& e : sweep) {
    c.Check(e.dist.assignment == e.tree.assignment, e.label + ": dist != tree");
    const Solution strict = StrictSequentialGreedy(e.instance);
    c.Check(e.dist.greedy_profit == strict.profit,
            e.label + ": dist pre-final profit != strict greedy");
    c.Check(e.tree.greedy_profit == strict.profit,
            e.label + ": tree pre-final profit != strict greedy");
    c.Check(e.simple.assignment == BatchRoundGreedy(e.instance).assignment,
            e.label + ": simple placement != batch round greedy");
  }
  return c.Report("dist == tree placement, pre-final profit == strict greedy, "
                  "simple == batch round greedy");
}

bool TraceAudit(const std::vector<SweepEntry>& sweep) {
  Criterion c("5 greedy-step trace audit");
  for (const SweepEntry& e : sweep) {
    for (const AlgorithmRun* run : {&e.dist, &e.tree}) {
      const auto problem = AuditGreedySteps(run->trace, e.instance, run->algorithm);
      c.Check(!problem.has_value(), e.label + ": " + std::string(AlgorithmName(run->algorithm)) +
                                        ": " + problem.value_or(""));
    }
  }
  return c.Report("every dist/tree award goes to the largest fitting knapsack, "
                  "smallest id on ties");
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs every command twice into separate directories and compares all output
// bytes, including stdout.
bool Determinism() {
  Criterion c("6 determinism");
  const std::filesystem::path root(DMKP_TEST_TMPDIR);
  std::filesystem::remove_all(root);
  std::vector<std::string> captured[2];
  for (int pass = 0; pass < 2; ++pass) {
    const std::filesystem::path dir = root / ("pass" + std::to_string(pass));
    std::filesystem::create_directories(dir);
    const auto p = [&](const std::string& name) { return (dir / name).string(); };
    std::vector<std::vector<std::string>> commands = {
        {"gen-random", "--m", "9", "--n", "4", "--seed", "17", "--out", p("rand.json")},
        {"gen-adversarial", "--n", "4", "--W", "10", "--out", p("adv.json")},
    };
    for (const char* alg : {"simple", "modified", "dist", "tree"}) {
      for (const char* inst : {"rand.json", "adv.json"}) {
        const std::string tag = std::string(alg) + "_" + inst;
        commands.push_back({"run", "--alg", alg, "--instance", p(inst), "--oracle",
                            "--report", p(tag + ".report"), "--trace",
                            p(tag + ".trace")});
      }
    }
    commands.push_back({"compare", "--instance", p("rand.json"), "--algs",
                        "simple,modified,dist,tree", "--oracle"});
    commands.push_back({"verify", "--sweep", "m=1..5", "n=1..3", "--seeds", "4"});
    for (const auto& args : commands) {
      std::ostringstream out;
      std::ostringstream err;
      const int code = cli::Dispatch(args, out, err);
      c.Check(code == cli::kExitOk, args[0] + " exited " + std::to_string(code) +
                                        ": " + err.str());
      captured[pass].push_back(out.str() + "\x1f" + err.str());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& f : std::filesystem::directory_iterator(dir)) files.push_back(f.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      captured[pass].push_back(f.filename().string() + "\x1f" + ReadFile(f));
    }
  }
  c.Check(captured[0].size() == captured[1].size(), "different number of outputs");
  for (size_t i = 0; i < std::min(captured[0].size(), captured[1].size()); ++i) {
    c.Check(captured[0][i] == captured[1][i],
            "output differs: " + captured[0][i].substr(0, captured[0][i].find('\x1f')));
  }
  std::ostringstream summary;
  summary << captured[0].size() << " outputs (reports, traces, instances, stdout) "
          << "byte-identical across two runs";
  return c.Report(summary.str());
}

}  // namespace
}  // namespace dmkp

int main() {
  using namespace dmkp;
  bool ok = WorstCaseFamily();
  double sweep_seconds = 0;
  const auto sweep = RunSweep(sweep_seconds);
  ok = ApproximationBound(sweep, sweep_seconds) && ok;
  ok = MessageCounts(sweep) && ok;
  ok = Equivalences(sweep) && ok;
  ok = TraceAudit(sweep) && ok;
  ok = Determinism() && ok;
  std::cout << (ok ? "PASS " : "FAIL ")
            << "7 property-based acceptance: criteria 1-6 "
            << (ok ? "all pass" : "not all pass") << '\n';
  return ok ? 0 : 1;
}
