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

#ifndef TWOFACTOR_SOLVER_H_
#define TWOFACTOR_SOLVER_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twofactor/factor.h"
#include "twofactor/graph.h"
#include "twofactor/pchain.h"

namespace twofactor {

enum class Strategy {
  kDfs,         // marking DFS per start vertex; fast, may stop early
  kExhaustive,  // complete backtracking; reference semantics
};

const char* ToString(Strategy s);
// Accepts "dfs" and "exhaustive". Throws std::invalid_argument otherwise.
Strategy ParseStrategy(std::string_view name);

enum class InitialFactor {
  kNull,    // empty edge set
  kGreedy,  // GreedyFactor()
};

struct SolveOptions {
  Strategy strategy = Strategy::kExhaustive;
  InitialFactor initial_kind = InitialFactor::kNull;
  // Overrides initial_kind when set. Must be a factor of the solved graph.
  std::optional<Factor> initial;
  bool record_trace = true;
};

struct TraceStep {
  int ts_before;
  PChain chain;
  int ts_after;
};

struct SolveReport {
  Factor initial_factor;
  Factor final_factor;
  int initial_ts = 0;
  int char_number = 0;
  bool is_two_factor = false;
  std::vector<TraceStep> trace{};  // empty unless record_trace
  Strategy strategy = Strategy::kExhaustive;
  int iterations = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Repeatedly finds a P-chain (sweeping deficient start vertices in ascending
// order, first hit wins) and applies it, until the factor is a 2-factor or no
// chain is found. Throws FactorError if options.initial is on another graph.
SolveReport MaximizeFactor(const Graph& g, const SolveOptions& options = {});

int CharNumber(const Graph& g, Strategy strategy = Strategy::kExhaustive);

struct TwoFactorResult {
  // Set iff the run reached characteristic number zero.
  std::optional<std::vector<std::vector<Vertex>>> cycles;
  // Characteristic number reached; the non-existence certificate when
  // cycles is empty.
  int char_number = 0;
  Strategy strategy = Strategy::kExhaustive;
};

TwoFactorResult TwoFactor(const Graph& g,
                          Strategy strategy = Strategy::kExhaustive);

enum class ReportFormat { kText, kStructured };

// Structured output is one "key=value" per line in a fixed key order. Vertex
// labels are printed 1-based in both formats.
std::string FormatReport(const SolveReport& report, ReportFormat format,
                         bool include_trace);

// Graphviz rendering: all graph edges, factor edges drawn bold.
std::string FactorToDot(const Factor& r);

}  // namespace twofactor

#endif  // TWOFACTOR_SOLVER_H_
