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

#ifndef TWOFACTOR_MINER_H_
#define TWOFACTOR_MINER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twofactor/solver.h"

namespace twofactor {

// Sweep definition. Every (n, p, seed) triple with n in [n_min, n_max], p in
// `ps`, and seed in [base_seed, base_seed + seeds) is one instance, built with
// GenerateRandom(n, p, seed).
struct MineConfig {
  int n_min = 5;
  int n_max = 9;
  std::vector<double> ps{0.3, 0.5, 0.7};
  int seeds = 100;
  std::uint64_t base_seed = 0;
  Strategy candidate = Strategy::kDfs;
  Strategy reference = Strategy::kExhaustive;
  // Gap instances are written here as edge-list files when set.
  std::optional<std::string> instance_dir;
  // 0 selects std::thread::hardware_concurrency().
  int threads = 0;
};

struct MineRecord {
  std::uint64_t seed = 0;
  int n = 0;
  double p = 0.0;
  int edges = 0;
  int candidate_ts = 0;
  int reference_ts = 0;
  int oracle_ts = 0;
  bool gap = false;            // candidate_ts > oracle_ts
  bool reference_gap = false;  // reference_ts != oracle_ts
  // Invariant breaches found while replaying either solver's trace. Must be
  // empty; anything here is a bug, not a finding.
  std::vector<std::string> soundness_issues;
  std::string instance_file;  // set when a gap instance was written
};

struct MineReport {
  MineConfig config;
  std::vector<MineRecord> records;  // ordered by (n, p, seed)
  int gap_count = 0;
  int reference_gap_count = 0;
  int soundness_violations = 0;
  double gap_rate() const {
    return records.empty() ? 0.0
                           : static_cast<double>(gap_count) / records.size();
  }
};

// Runs both strategies and the exact oracle on every instance. Gaps are data:
// the run never fails because of them.
MineReport MineCounterexamples(const MineConfig& config);

// Re-solves one instance. Identical to the corresponding record produced by a
// sweep (instance_file aside).
MineRecord MineInstance(int n, double p, std::uint64_t seed,
                        Strategy candidate, Strategy reference);

// Replays a solve trace from its initial factor and reports every invariant
// breach: invalid chains, steps that do not lower ts by two, stale caches,
// and final-state mismatches.
std::vector<std::string> AuditReport(const SolveReport& report);

// "record seed=.. n=.. p=.. edges=.. dfs_ts=.. ..." lines followed by
// "summary ..." lines.
std::string FormatMineReport(const MineReport& report);

}  // namespace twofactor

#endif  // TWOFACTOR_MINER_H_
