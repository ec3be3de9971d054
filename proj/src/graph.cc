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

#include "twofactor/graph.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace twofactor {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> ParseInt(std::string_view token) {
  long long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Edge list of the worked-example graph, 1-based: the two paths and the
// extra edges used by the three augmenting chains.
constexpr std::pair<int, int> kFig1Edges[] = {
    {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 6},   {6, 7},  {7, 8},
    {8, 9},   {9, 10},  {10, 11}, {12, 13}, {13, 14}, {14, 15}, {1, 5},
    {4, 8},   {9, 6},   {5, 12},  {16, 2},  {3, 14},  {13, 16}, {11, 15},
};

void RequireParams(std::string_view family, std::span<const int> params,
                   std::size_t count) {
  if (params.size() != count) {
    throw GraphError("family '" + std::string(family) + "' expects " +
                     std::to_string(count) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : GraphError(line > 0 ? "line " + std::to_string(line) + ": " + what
                          : what),
      line_(line) {}

Graph Graph::FromEdges(int num_vertices,
                       std::span<const std::pair<Vertex, Vertex>> edges) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  Graph g;
  g.adjacency_.resize(num_vertices);
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices) {
      throw GraphError("vertex out of range in edge (" + std::to_string(a) +
                       ", " + std::to_string(b) + ")");
    }
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    const EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
    g.adjacency_[a].push_back({b, id});
    g.adjacency_[b].push_back({a, id});
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end(), [](const Incidence& x, const Incidence& y) {
      return x.neighbor < y.neighbor;
    });
    for (std::size_t i = 1; i < adj.size(); ++i) {
      if (adj[i].neighbor == adj[i - 1].neighbor) {
        throw GraphError("duplicate edge (" +
                         std::to_string(std::min(v, adj[i].neighbor)) + ", " +
                         std::to_string(std::max(v, adj[i].neighbor)) + ")");
      }
    }
  }
  return g;
}

std::optional<EdgeId> Graph::FindEdge(Vertex a, Vertex b) const {
  if (!contains_vertex(a) || !contains_vertex(b)) return std::nullopt;
  const auto& adj = adjacency_[a];
  auto it = std::lower_bound(
      adj.begin(), adj.end(), b,
      [](const Incidence& inc, Vertex key) { return inc.neighbor < key; });
  if (it == adj.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

bool Graph::SameEdgeSet(const Graph& other) const {
  return num_vertices() == other.num_vertices() &&
         SortedEdges() == other.SortedEdges();
}

std::vector<Edge> Graph::SortedEdges() const {
  std::vector<Edge> sorted(edges_.begin(), edges_.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Graph ParseEdgeList(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<int> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = Tokens(line);
    if (!n) {
      if (tokens.size() != 1) {
        throw ParseError(line_no, "expected vertex count, got '" + line + "'");
      }
      const auto value = ParseInt(tokens[0]);
      if (!value || *value < 0 || *value > std::numeric_limits<int>::max()) {
        throw ParseError(line_no, "invalid vertex count '" + line + "'");
      }
      n = static_cast<int>(*value);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "malformed edge line '" + line + "'");
    }
    const auto a = ParseInt(tokens[0]);
    const auto b = ParseInt(tokens[1]);
    if (!a || !b) {
      throw ParseError(line_no, "malformed edge line '" + line + "'");
    }
    if (*a < 0 || *a >= *n || *b < 0 || *b >= *n) {
      throw ParseError(line_no, "vertex index out of range in '" + line + "'");
    }
    if (*a == *b) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(*a));
    }
    edges.emplace_back(static_cast<Vertex>(*a), static_cast<Vertex>(*b));
    edge_lines.push_back(line_no);
  }
  if (!n) throw ParseError(0, "missing vertex count");

  // Duplicates are detected here so the diagnostic can name the line.
  std::vector<std::pair<Edge, int>> keyed;
  keyed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    keyed.push_back({{std::min(a, b), std::max(a, b)}, edge_lines[i]});
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      throw ParseError(keyed[i].second,
                       "duplicate edge (" + std::to_string(keyed[i].first.u) +
                           ", " + std::to_string(keyed[i].first.v) + ")");
    }
  }
  return Graph::FromEdges(*n, edges);
}

Graph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in);
}

std::string EmitEdgeList(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + "\n";
  for (const Edge& e : g.SortedEdges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph GenerateNamed(std::string_view family, std::span<const int> params) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (family == "path") {
    RequireParams(family, params, 1);
    const int n = params[0];
    if (n < 1) throw GraphError("path needs n >= 1");
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::FromEdges(n, edges);
  }
  if (family == "cycle") {
    RequireParams(family, params, 1);
    const int n = params[0];
    if (n < 3) throw GraphError("cycle needs n >= 3");
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::FromEdges(n, edges);
  }
  if (family == "complete") {
    RequireParams(family, params, 1);
    const int n = params[0];
    if (n < 1) throw GraphError("complete needs n >= 1");
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph::FromEdges(n, edges);
  }
  if (family == "star") {
    RequireParams(family, params, 1);
    const int leaves = params[0];
    if (leaves < 1) throw GraphError("star needs at least one leaf");
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::FromEdges(leaves + 1, edges);
  }
  if (family == "complete_bipartite") {
    RequireParams(family, params, 2);
    const int a = params[0];
    const int b = params[1];
    if (a < 1 || b < 1) throw GraphError("complete_bipartite needs a, b >= 1");
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    }
    return Graph::FromEdges(a + b, edges);
  }
  if (family == "petersen") {
    RequireParams(family, params, 0);
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      edges.emplace_back(i, i + 5);
    }
    return Graph::FromEdges(10, edges);
  }
  if (family == "fig1") {
    RequireParams(family, params, 0);
    for (const auto& [a, b] : kFig1Edges) edges.emplace_back(a - 1, b - 1);
    return Graph::FromEdges(16, edges);
  }
  throw GraphError("unknown graph family '" + std::string(family) + "'");
}

Graph GenerateRandom(int n, double p, std::uint64_t seed) {
  if (n < 0) throw GraphError("negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * kScale;
      if (draw < p) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph Relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.num_vertices();
  if (static_cast<int>(perm.size()) != n) {
    throw GraphError("permutation size does not match vertex count");
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || seen[v]) throw GraphError("not a permutation");
    seen[v] = 1;
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::FromEdges(n, edges);
}

std::vector<Vertex> RandomPermutation(int n, std::uint64_t seed) {
  std::vector<Vertex> perm(std::max(n, 0));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace twofactor
