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

#include "twofactor/solver.h"

#include <sstream>
#include <stdexcept>

namespace twofactor {
namespace {

std::string Labels(const std::vector<Vertex>& vertices) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vertices[i] + 1);
  }
  return out;
}

std::optional<PChain> FindChain(ChainSearch& search, const Factor& r,
                                Strategy strategy) {
  if (strategy == Strategy::kExhaustive) return search.Exhaustive(r);
  for (Vertex v = 0; v < r.num_vertices(); ++v) {
    if (r.degree(v) > 1) continue;
    if (auto chain = search.Dfs(r, v)) return chain;
  }
  return std::nullopt;
}

}  // namespace

const char* ToString(Strategy s) {
  return s == Strategy::kDfs ? "dfs" : "exhaustive";
}

Strategy ParseStrategy(std::string_view name) {
  if (name == "dfs") return Strategy::kDfs;
  if (name == "exhaustive") return Strategy::kExhaustive;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

SolveReport MaximizeFactor(const Graph& g, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  Factor initial = Factor::Null(g);
  if (options.initial) {
    if (&options.initial->graph() != &g) {
      throw FactorError("initial factor belongs to a different graph");
    }
    initial = Revalidate(*options.initial);
  } else if (options.initial_kind == InitialFactor::kGreedy) {
    initial = GreedyFactor(g);
  }

  SolveReport report{.initial_factor = initial,
                     .final_factor = initial,
                     .initial_ts = initial.characteristic_number(),
                     .strategy = options.strategy};
  ChainSearch search(g);
  Factor& current = report.final_factor;
  while (current.characteristic_number() > 0) {
    auto chain = FindChain(search, current, options.strategy);
    if (!chain) break;
    Factor next = ApplyPChain(current, *chain);
    if (options.record_trace) {
      report.trace.push_back({current.characteristic_number(),
                              std::move(*chain),
                              next.characteristic_number()});
    }
    current = std::move(next);
    ++report.iterations;
  }
  report.char_number = current.characteristic_number();
  report.is_two_factor = report.char_number == 0;
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

int CharNumber(const Graph& g, Strategy strategy) {
  SolveOptions options;
  options.strategy = strategy;
  options.record_trace = false;
  return MaximizeFactor(g, options).char_number;
}

TwoFactorResult TwoFactor(const Graph& g, Strategy strategy) {
  SolveOptions options;
  options.strategy = strategy;
  options.record_trace = false;
  const SolveReport report = MaximizeFactor(g, options);
  TwoFactorResult result;
  result.char_number = report.char_number;
  result.strategy = strategy;
  if (report.is_two_factor) result.cycles = ExtractTwoFactor(report.final_factor);
  return result;
}

std::string FormatReport(const SolveReport& report, ReportFormat format,
                         bool include_trace) {
  const Factor& r = report.final_factor;
  const Graph& g = r.graph();
  const FactorDecomposition parts = Decompose(r);
  std::ostringstream out;
  if (format == ReportFormat::kStructured) {
    out << "strategy=" << ToString(report.strategy) << '\n'
        << "vertices=" << g.num_vertices() << '\n'
        << "edges=" << g.num_edges() << '\n'
        << "initial_ts=" << report.initial_ts << '\n'
        << "char_number=" << report.char_number << '\n'
        << "is_two_factor=" << (report.is_two_factor ? "true" : "false") << '\n'
        << "iterations=" << report.iterations << '\n'
        << "elapsed_ns=" << report.elapsed.count() << '\n';
    out << "factor=";
    bool first = true;
    for (EdgeId e : r.edge_ids()) {
      out << (first ? "" : " ") << g.edge(e).u + 1 << '-' << g.edge(e).v + 1;
      first = false;
    }
    out << '\n';
    out << "cycles=" << parts.cycles.size() << '\n';
    for (std::size_t i = 0; i < parts.cycles.size(); ++i) {
      out << "cycle." << i + 1 << '=' << Labels(parts.cycles[i]) << '\n';
    }
    out << "paths=" << parts.paths.size() << '\n';
    for (std::size_t i = 0; i < parts.paths.size(); ++i) {
      out << "path." << i + 1 << '=' << Labels(parts.paths[i]) << '\n';
    }
    out << "isolated=" << Labels(parts.isolated) << '\n';
    if (include_trace) {
      out << "trace_steps=" << report.trace.size() << '\n';
      for (std::size_t i = 0; i < report.trace.size(); ++i) {
        const TraceStep& step = report.trace[i];
        out << "trace." << i + 1 << '=' << step.ts_before << ' '
            << step.ts_after << " | " << Labels(step.chain.vertices) << '\n';
      }
    }
    return out.str();
  }

  out << "strategy:              " << ToString(report.strategy) << '\n'
      << "graph:                 " << g.num_vertices() << " vertices, "
      << g.num_edges() << " edges\n"
      << "characteristic number: " << report.char_number << '\n'
      << "initial ts:            " << report.initial_ts << " ("
      << report.iterations << " augmentations)\n";
  if (report.is_two_factor) {
    out << "2-factor with " << parts.cycles.size() << " cycle(s):\n";
  } else {
    out << "no 2-factor reached; maximum [0,2]-factor has "
        << parts.cycles.size() << " cycle(s), " << parts.paths.size()
        << " path(s), " << parts.isolated.size() << " isolated vertex(es)\n";
  }
  for (const auto& c : parts.cycles) out << "  cycle (" << Labels(c) << ")\n";
  for (const auto& p : parts.paths) out << "  path  (" << Labels(p) << ")\n";
  for (Vertex v : parts.isolated) out << "  isolated " << v + 1 << '\n';
  out << "elapsed:               "
      << std::chrono::duration<double, std::milli>(report.elapsed).count()
      << " ms\n";
  if (include_trace) {
    out << "trace:\n";
    for (const TraceStep& step : report.trace) {
      out << "  ts " << step.ts_before << " -> " << step.ts_after << "  via ("
          << Labels(step.chain.vertices) << ")\n";
    }
  }
  return out.str();
}

std::string FactorToDot(const Factor& r) {
  const Graph& g = r.graph();
  std::ostringstream out;
  out << "graph factor {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v + 1 << ";\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "  " << g.edge(e).u + 1 << " -- " << g.edge(e).v + 1;
    if (r.contains(e)) {
      out << " [penwidth=3]";
    } else {
      out << " [style=dashed, color=gray]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace twofactor
