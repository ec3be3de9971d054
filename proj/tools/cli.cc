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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "twofactor/factor.h"
#include "twofactor/graph.h"
#include "twofactor/miner.h"
#include "twofactor/oracle.h"
#include "twofactor/pchain.h"
#include "twofactor/solver.h"

namespace twofactor {
namespace {

// Input problems that map to kExitUsage.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << contents;
  }
  std::filesystem::rename(tmp, path);
}

Graph LoadGraph(const std::string& path) {
  try {
    return ParseEdgeList(ReadFile(path));
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<Vertex> ParseChainLine(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<Vertex> out;
    std::string tok;
    while (tokens >> tok) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        out.push_back(v);
      } catch (const std::exception&) {
        throw InputError("chain: '" + tok + "' is not a vertex index");
      }
    }
    return out;
  }
  throw InputError("chain file has no vertex line");
}

ReportFormat ParseFormat(const std::string& name) {
  if (name == "structured") return ReportFormat::kStructured;
  return ReportFormat::kText;
}

int RunSolve(const std::string& graph_path, const std::string& strategy,
             const std::string& initial_path, bool greedy, bool trace,
             const std::string& format, const std::string& dot_path,
             const std::string& out_path, std::ostream& out) {
  const Graph g = LoadGraph(graph_path);
  SolveOptions options;
  options.strategy = ParseStrategy(strategy);
  options.record_trace = trace;
  if (greedy) options.initial_kind = InitialFactor::kGreedy;
  if (!initial_path.empty()) {
    try {
      options.initial = ParseFactor(g, ReadFile(initial_path));
    } catch (const FactorError& e) {
      throw InputError(initial_path + ": " + e.what());
    } catch (const GraphError& e) {
      throw InputError(initial_path + ": " + e.what());
    }
  }
  const SolveReport report = MaximizeFactor(g, options);
  const std::string text = FormatReport(report, ParseFormat(format), trace);
  if (out_path.empty()) {
    out << text;
  } else {
    WriteFile(out_path, text);
  }
  if (!dot_path.empty()) WriteFile(dot_path, FactorToDot(report.final_factor));
  return report.is_two_factor ? kExitTwoFactor : kExitNoTwoFactor;
}

int RunVerify(const std::string& graph_path, const std::string& factor_path,
              const std::string& chain_path, std::ostream& out) {
  const Graph g = LoadGraph(graph_path);
  const std::string factor_text = ReadFile(factor_path);
  std::optional<Factor> factor;
  try {
    factor = ParseFactor(g, factor_text);
  } catch (const DegreeError& e) {
    out << "factor invalid: vertex " << e.vertex() + 1 << " has degree "
        << e.degree() << " (> 2)\n";
    return kExitNoTwoFactor;
  } catch (const GraphError& e) {
    throw InputError(factor_path + ": " + e.what());
  }
  const FactorDecomposition parts = Decompose(*factor);
  out << "factor valid: ts=" << factor->characteristic_number() << " ("
      << parts.cycles.size() << " cycle(s), " << parts.paths.size()
      << " path(s), " << parts.isolated.size() << " isolated)\n";
  if (chain_path.empty()) return kExitTwoFactor;

  const std::vector<Vertex> labels = ParseChainLine(ReadFile(chain_path));
  PChain chain;
  try {
    chain = ChainFromVertices(g, labels);
  } catch (const GraphError& e) {
    out << "chain invalid: " << ToString(ChainViolation::Kind::kBrokenAdjacency)
        << ": " << e.what() << '\n';
    return kExitNoTwoFactor;
  }
  const auto violations = ValidatePChain(*factor, chain);
  if (!violations.empty()) {
    for (const auto& v : violations) {
      out << "chain invalid: " << ToString(v.kind) << ": " << v.message << '\n';
    }
    return kExitNoTwoFactor;
  }
  const Factor after = ApplyPChain(*factor, chain);
  out << "chain valid (" << (chain.closed() ? "closed" : "open") << ", "
      << chain.length() << " edge(s))\n"
      << "ts " << factor->characteristic_number() << " -> "
      << after.characteristic_number() << '\n';
  return kExitTwoFactor;
}

int RunOracle(const std::string& graph_path, const std::string& format,
              std::ostream& out) {
  const Graph g = LoadGraph(graph_path);
  OracleResult result = [&] {
    try {
      return BruteForceCharNumber(g);
    } catch (const OracleGuardError& e) {
      throw InputError(e.what());
    }
  }();
  std::string witness;
  for (EdgeId e : result.witness.edge_ids()) {
    if (!witness.empty()) witness += ' ';
    witness += std::to_string(g.edge(e).u + 1) + "-" +
               std::to_string(g.edge(e).v + 1);
  }
  if (ParseFormat(format) == ReportFormat::kStructured) {
    out << "max_edges=" << result.max_edges << '\n'
        << "min_ts=" << result.min_ts << '\n'
        << "witness=" << witness << '\n';
  } else {
    out << "maximum 2-matching: " << result.max_edges << " edges\n"
        << "min ts:             " << result.min_ts << '\n'
        << "witness:            " << witness << '\n';
  }
  return result.min_ts == 0 ? kExitTwoFactor : kExitNoTwoFactor;
}

int RunMine(const std::vector<int>& n_range, const std::vector<double>& ps,
            int seeds, std::uint64_t seed, const std::string& strategy,
            const std::string& instances, int threads,
            const std::string& out_path, std::ostream& out) {
  MineConfig config;
  config.n_min = n_range.front();
  config.n_max = n_range.back();
  config.ps = ps;
  config.seeds = seeds;
  config.base_seed = seed;
  config.candidate = ParseStrategy(strategy);
  config.threads = threads;
  if (!instances.empty()) config.instance_dir = instances;
  if (config.n_min > config.n_max || config.seeds < 0) {
    throw InputError("invalid sweep range");
  }
  for (double p : ps) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("p must lie in [0, 1]");
  }
  MineReport report;
  try {
    report = MineCounterexamples(config);
  } catch (const OracleGuardError& e) {
    throw InputError(e.what());
  }
  const std::string text = FormatMineReport(report);
  if (out_path.empty()) {
    out << text;
  } else {
    WriteFile(out_path, text);
    out << "summary instances=" << report.records.size()
        << " gaps=" << report.gap_count
        << " soundness_violations=" << report.soundness_violations << '\n';
  }
  return report.soundness_violations == 0 ? kExitTwoFactor : kExitNoTwoFactor;
}

int RunGen(std::string family, std::vector<int> params, int n, double p,
           std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  Graph g;
  try {
    if (family == "random") {
      if (n < 0) throw InputError("gen random needs --n");
      g = GenerateRandom(n, p, seed);
    } else {
      if (params.empty() && n >= 0) params.push_back(n);
      g = GenerateNamed(family, params);
    }
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
  const std::string text = EmitEdgeList(g);
  if (out_path.empty()) {
    out << text;
  } else {
    WriteFile(out_path, text);
  }
  return kExitTwoFactor;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Maximum [0,2]-factors, characteristic numbers and 2-factors"};
  app.name("twofactor");
  app.require_subcommand(1, 1);

  std::string strategy = "exhaustive";
  std::string format = "text";
  std::string out_path;

  std::string graph_path, initial_path, dot_path;
  bool trace = false;
  bool greedy = false;
  auto* solve = app.add_subcommand("solve", "Maximize a [0,2]-factor");
  solve->add_option("graph", graph_path, "Edge-list file (- for stdin)")->required();
  solve->add_option("--strategy", strategy, "dfs | exhaustive")
      ->check(CLI::IsMember({"dfs", "exhaustive"}));
  solve->add_option("--initial", initial_path, "Initial factor file");
  solve->add_flag("--greedy", greedy, "Greedy warm start");
  solve->add_flag("--trace", trace, "Print the augmentation trace");
  solve->add_option("--format", format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
  solve->add_option("--dot", dot_path, "Write the final factor as DOT");
  solve->add_option("--out", out_path, "Write the report here");

  std::string factor_path, chain_path;
  auto* verify = app.add_subcommand("verify", "Check a factor and a P-chain");
  verify->add_option("graph", graph_path, "Edge-list file (- for stdin)")->required();
  verify->add_option("factor", factor_path, "Factor file")->required();
  verify->add_option("--chain", chain_path,
                     "File with one line of 0-based vertex ids");

  auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration");
  oracle->add_option("graph", graph_path, "Edge-list file (- for stdin)")->required();
  oracle->add_option("--format", format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::vector<int> n_range{5, 9};
  std::vector<double> ps{0.3, 0.5, 0.7};
  int seeds = 100;
  std::uint64_t seed = 0;
  std::string instances;
  int threads = 0;
  std::string mine_strategy = "dfs";
  auto* mine = app.add_subcommand("mine", "Compare dfs against the oracle");
  mine->add_option("--n", n_range, "Vertex count or min max")
      ->expected(1, 2)
      ->check(CLI::PositiveNumber);
  mine->add_option("--p", ps, "Edge probabilities")->expected(1, -1);
  mine->add_option("--seeds", seeds, "Seeds per (n, p)");
  mine->add_option("--seed", seed, "First seed");
  mine->add_option("--strategy", mine_strategy, "Candidate strategy")
      ->check(CLI::IsMember({"dfs", "exhaustive"}));
  mine->add_option("--instances", instances, "Directory for gap instances");
  mine->add_option("--threads", threads, "Worker threads (0 = auto)");
  mine->add_option("--out", out_path, "Write the mining report here");

  std::string family;
  std::vector<int> params;
  int gen_n = -1;
  double gen_p = 0.5;
  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  gen->add_option("family,--family", family,
                  "path | cycle | complete | star | complete_bipartite | "
                  "petersen | fig1 | random");
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--n", gen_n, "Vertex count (random, or single-size families)");
  gen->add_option("--p", gen_p, "Edge probability (random)");
  gen->add_option("--seed", seed, "Seed (random)");
  gen->add_option("--out", out_path, "Output file");

  std::vector<const char*> argv{"twofactor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      return RunSolve(graph_path, strategy, initial_path, greedy, trace, format,
                      dot_path, out_path, out);
    }
    if (verify->parsed()) return RunVerify(graph_path, factor_path, chain_path, out);
    if (oracle->parsed()) return RunOracle(graph_path, format, out);
    if (mine->parsed()) {
      return RunMine(n_range, ps, seeds, seed, mine_strategy, instances,
                     threads, out_path, out);
    }
    if (gen->parsed()) {
      if (family.empty()) throw InputError("gen needs a family");
      return RunGen(family, params, gen_n, gen_p, seed, out_path, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace twofactor
