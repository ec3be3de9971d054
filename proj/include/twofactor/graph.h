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

#ifndef TWOFACTOR_GRAPH_H_
#define TWOFACTOR_GRAPH_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twofactor {

using Vertex = int;
using EdgeId = int;

// Endpoints are stored normalized so that u < v.
struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the edge-list reader. `line()` is 1-based; 0 when the failure is
// not tied to a specific line (e.g. empty input).
class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Finite simple undirected graph on vertices 0..n-1. Edge ids are dense and
// assigned in insertion order. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on self-loops, parallel edges, or out-of-range
  // endpoints.
  static Graph FromEdges(int num_vertices,
                         std::span<const std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  // Sorted ascending by neighbor id.
  std::span<const Incidence> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  std::optional<EdgeId> FindEdge(Vertex a, Vertex b) const;

  // The endpoint of `e` that is not `v`.
  Vertex Other(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  bool contains_vertex(Vertex v) const {
    return v >= 0 && v < num_vertices();
  }

  // Same vertex count and the same set of unordered pairs; edge ids may
  // differ.
  bool SameEdgeSet(const Graph& other) const;

  // Edges sorted by (min endpoint, max endpoint).
  std::vector<Edge> SortedEdges() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Edge-list format: first non-comment line holds n, then one "u v" pair per
// line. Blank lines and lines starting with '#' are skipped.
Graph ParseEdgeList(std::istream& in);
Graph ParseEdgeList(std::string_view text);

// Canonical form: header line, then edges sorted by (min, max), each line
// terminated by '\n'.
std::string EmitEdgeList(const Graph& g);

// Families: path(n), cycle(n>=3), complete(n), star(k) = K_{1,k},
// complete_bipartite(a, b), petersen, fig1. Throws GraphError on an unknown
// family or bad parameters.
Graph GenerateNamed(std::string_view family, std::span<const int> params = {});

// Erdos-Renyi G(n, p). Pairs (u, v) with u < v are visited in lexicographic
// order; each draws one 64-bit word from std::mt19937_64 seeded with `seed`
// and keeps the edge iff (word >> 11) * 2^-53 < p. mt19937_64 output is fixed
// by the standard, so the result is identical across platforms.
Graph GenerateRandom(int n, double p, std::uint64_t seed);

// Maps vertex v to perm[v]. Edge ids are preserved. Throws GraphError when
// perm is not a permutation of 0..n-1.
Graph Relabel(const Graph& g, std::span<const Vertex> perm);

// Fisher-Yates over mt19937_64 with modulo reduction; deterministic per seed.
std::vector<Vertex> RandomPermutation(int n, std::uint64_t seed);

}  // namespace twofactor

#endif  // TWOFACTOR_GRAPH_H_
