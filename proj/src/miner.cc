// Copyright 2026 The twofactor Authors
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

#include "twofactor/miner.h"

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "twofactor/oracle.h"

namespace twofactor {
namespace {

std::string FormatP(double p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

void WriteAtomically(const std::filesystem::path& path,
                     const std::string& contents) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << contents;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::vector<std::string> AuditReport(const SolveReport& report) {
  std::vector<std::string> issues;
  try {
    Factor current = Revalidate(report.initial_factor);
    int expected_ts = report.initial_ts;
    if (current.characteristic_number() != expected_ts) {
      issues.push_back("initial ts mismatch");
    }
    for (std::size_t i = 0; i < report.trace.size(); ++i) {
      const TraceStep& step = report.trace[i];
      const std::string where = "step " + std::to_string(i + 1) + ": ";
      if (step.ts_before != current.characteristic_number()) {
        issues.push_back(where + "ts_before does not match replayed factor");
      }
      const auto violations = ValidatePChain(current, step.chain);
      for (const auto& v : violations) {
        issues.push_back(where + ToString(v.kind) + ": " + v.message);
      }
      if (!violations.empty()) return issues;
      current = Revalidate(current.Xor(step.chain.edges));
      if (step.ts_after != step.ts_before - 2 ||
          current.characteristic_number() != step.ts_after ||
          CountDeficiency(current) != step.ts_after) {
        issues.push_back(where + "ts did not drop by exactly 2");
      }
    }
    if (!report.trace.empty() && !(current == report.final_factor)) {
      issues.push_back("replayed factor differs from reported final factor");
    }
    Revalidate(report.final_factor);
    if (report.char_number != CountDeficiency(report.final_factor)) {
      issues.push_back("reported characteristic number is stale");
    }
    if (report.is_two_factor != (report.char_number == 0)) {
      issues.push_back("is_two_factor flag disagrees with char_number");
    }
    if (report.iterations * 2 != report.initial_ts - report.char_number) {
      issues.push_back("iteration count disagrees with ts descent");
    }
  } catch (const std::exception& e) {
    issues.push_back(std::string("exception: ") + e.what());
  }
  return issues;
}

MineRecord MineInstance(int n, double p, std::uint64_t seed,
                        Strategy candidate, Strategy reference) {
  const Graph g = GenerateRandom(n, p, seed);
  MineRecord record;
  record.seed = seed;
  record.n = n;
  record.p = p;
  record.edges = g.num_edges();

  SolveOptions options;
  options.record_trace = true;
  options.strategy = candidate;
  const SolveReport cand = MaximizeFactor(g, options);
  options.strategy = reference;
  const SolveReport ref = MaximizeFactor(g, options);
  for (const auto& issue : AuditReport(cand)) {
    record.soundness_issues.push_back(std::string(ToString(candidate)) + " " +
                                      issue);
  }
  for (const auto& issue : AuditReport(ref)) {
    record.soundness_issues.push_back(std::string(ToString(reference)) + " " +
                                      issue);
  }
  const OracleResult oracle = BruteForceCharNumber(g);
  record.candidate_ts = cand.char_number;
  record.reference_ts = ref.char_number;
  record.oracle_ts = oracle.min_ts;
  record.gap = cand.char_number > oracle.min_ts;
  record.reference_gap = ref.char_number != oracle.min_ts;
  if (cand.char_number < oracle.min_ts) {
    record.soundness_issues.push_back(
        "candidate strategy beat the exact optimum");
  }
  return record;
}

MineReport MineCounterexamples(const MineConfig& config) {
  struct Job {
    int n;
    double p;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (double p : config.ps) {
      for (int s = 0; s < config.seeds; ++s) {
        jobs.push_back({n, p, config.base_seed + static_cast<std::uint64_t>(s)});
      }
    }
  }

  MineReport report;
  report.config = config;
  report.records.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        report.records[i] = MineInstance(jobs[i].n, jobs[i].p, jobs[i].seed,
                                         config.candidate, config.reference);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(jobs.size());
      }
    }
  };
  int threads = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  if (config.instance_dir) {
    std::filesystem::create_directories(*config.instance_dir);
  }
  for (MineRecord& r : report.records) {
    if (r.gap) ++report.gap_count;
    if (r.reference_gap) ++report.reference_gap_count;
    report.soundness_violations += static_cast<int>(r.soundness_issues.size());
    if (r.gap && config.instance_dir) {
      const auto path = std::filesystem::path(*config.instance_dir) /
                        ("gap_n" + std::to_string(r.n) + "_p" + FormatP(r.p) +
                         "_s" + std::to_string(r.seed) + ".txt");
      std::string contents = "# replay: n=" + std::to_string(r.n) +
                             " p=" + FormatP(r.p) +
                             " seed=" + std::to_string(r.seed) + "\n";
      contents += EmitEdgeList(GenerateRandom(r.n, r.p, r.seed));
      WriteAtomically(path, contents);
      r.instance_file = path.string();
    }
  }
  return report;
}

std::string FormatMineReport(const MineReport& report) {
  const char* cand = ToString(report.config.candidate);
  const char* ref = ToString(report.config.reference);
  std::ostringstream out;
  for (const MineRecord& r : report.records) {
    out << "record seed=" << r.seed << " n=" << r.n << " p=" << FormatP(r.p)
        << " edges=" << r.edges << ' ' << cand << "_ts=" << r.candidate_ts
        << ' ' << ref << "_ts=" << r.reference_ts
        << " oracle_ts=" << r.oracle_ts << " gap=" << (r.gap ? 1 : 0)
        << " reference_gap=" << (r.reference_gap ? 1 : 0)
        << " soundness=" << r.soundness_issues.size();
    if (!r.instance_file.empty()) out << " file=" << r.instance_file;
    out << '\n';
    for (const auto& issue : r.soundness_issues) {
      out << "violation seed=" << r.seed << " n=" << r.n
          << " p=" << FormatP(r.p) << " : " << issue << '\n';
    }
  }
  out << "summary instances=" << report.records.size() << '\n'
      << "summary candidate=" << cand << " reference=" << ref << '\n'
      << "summary gaps=" << report.gap_count << '\n'
      << "summary gap_rate=" << report.gap_rate() << '\n'
      << "summary reference_gaps=" << report.reference_gap_count << '\n'
      << "summary soundness_violations=" << report.soundness_violations
      << '\n';
  return out.str();
}

}  // namespace twofactor
