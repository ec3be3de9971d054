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

#ifndef TWOFACTOR_FACTOR_H_
#define TWOFACTOR_FACTOR_H_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twofactor/graph.h"

namespace twofactor {

class FactorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex whose factor degree would exceed two. `vertex()` is 0-based.
class DegreeError : public FactorError {
 public:
  DegreeError(Vertex v, int degree);
  Vertex vertex() const { return vertex_; }
  int degree() const { return degree_; }

 private:
  Vertex vertex_;
  int degree_;
};

// Spanning subgraph with every degree in {0, 1, 2}, stored as a subset of the
// host graph's edge ids. The host graph must outlive the factor.
//
// The characteristic number sum_v (2 - deg(v)) = 2n - 2|E(R)| is cached and
// kept current by Toggle(); CountDeficiency() recomputes it from the degree
// table.
class Factor {
 public:
  // Empty edge set; characteristic number 2n.
  static Factor Null(const Graph& g);

  // Throws FactorError for unknown or repeated edge ids and DegreeError for
  // the first vertex (lowest id) of degree > 2.
  static Factor FromEdges(const Graph& g, std::span<const EdgeId> edge_ids);

  const Graph& graph() const { return *graph_; }
  int num_vertices() const { return graph_->num_vertices(); }

  bool contains(EdgeId e) const { return in_factor_[e] != 0; }
  int degree(Vertex v) const { return degree_[v]; }
  int size() const { return edge_count_; }

  int characteristic_number() const {
    return 2 * num_vertices() - 2 * edge_count_;
  }

  // Sorted ascending.
  std::vector<EdgeId> edge_ids() const;

  // Symmetric difference with `edges` (which must be distinct). Throws
  // DegreeError if the result is not a [0,2]-factor; *this is unchanged in
  // that case.
  Factor Xor(std::span<const EdgeId> edges) const;

  friend bool operator==(const Factor& a, const Factor& b) {
    return a.graph_ == b.graph_ && a.in_factor_ == b.in_factor_;
  }

 private:
  explicit Factor(const Graph& g);

  const Graph* graph_;
  std::vector<char> in_factor_;
  std::vector<int> degree_;
  int edge_count_ = 0;
};

// Slow path: sum over vertices of (2 - deg(v)), from the degree table.
int CountDeficiency(const Factor& r);

// Rebuilds the factor from its edge ids, checking every invariant. Returns the
// fresh copy; throws on violation.
Factor Revalidate(const Factor& r);

struct FactorDecomposition {
  std::vector<std::vector<Vertex>> cycles;  // first vertex not repeated
  std::vector<std::vector<Vertex>> paths;   // at least two vertices
  std::vector<Vertex> isolated;
};

// Components listed in order of their lowest vertex. Cycles start at their
// lowest vertex and continue toward its lower neighbor; paths start at their
// lower endpoint.
FactorDecomposition Decompose(const Factor& r);

class NotTwoFactorError : public FactorError {
 public:
  explicit NotTwoFactorError(int characteristic_number);
  int characteristic_number() const { return ts_; }

 private:
  int ts_;
};

std::vector<std::vector<Vertex>> ExtractTwoFactor(const Factor& r);

// Same format as the graph edge list, restricted to factor edges.
std::string EmitFactor(const Factor& r);

// Resolves each "u v" line to the host graph's edge id. Throws ParseError for
// syntax problems or pairs that are not edges of `g`, DegreeError for an
// overfull vertex.
Factor ParseFactor(const Graph& g, std::string_view text);

// Greedy warm start: scan edge ids ascending and keep an edge when both
// endpoints still have degree < 2.
Factor GreedyFactor(const Graph& g);

}  // namespace twofactor

#endif  // TWOFACTOR_FACTOR_H_
