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

#ifndef TWOFACTOR_PCHAIN_H_
#define TWOFACTOR_PCHAIN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twofactor/factor.h"
#include "twofactor/graph.h"

namespace twofactor {

// Alternating chain x1 e1 x2 e2 ... ek x(k+1), where edges[i] joins
// vertices[i] and vertices[i + 1]. Vertices may repeat; edges may not.
struct PChain {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  bool closed() const {
    return !vertices.empty() && vertices.front() == vertices.back() &&
           !edges.empty();
  }
  int length() const { return static_cast<int>(edges.size()); }

  friend bool operator==(const PChain&, const PChain&) = default;
};

struct ChainViolation {
  enum class Kind {
    kEmpty,
    kShape,           // vertices.size() != edges.size() + 1
    kUnknownEdge,
    kBrokenAdjacency,  // edge i does not join vertices i and i+1
    kEvenLength,
    kRepeatedEdge,
    kEdgeMembership,  // odd position in the factor, or even position outside
    kEndpointDegree,
    kInnerMultiplicity,
  };
  Kind kind;
  std::string message;
};

const char* ToString(ChainViolation::Kind kind);

// Checks every P-chain condition against `r` and reports each failure
// separately. An empty result means the chain is valid.
//
// Positions are 1-based as in the usual statement: odd positions hold
// non-factor edges, even positions factor edges, and the length is odd. An
// open chain needs deg(x1) <= 1 and deg(x(k+1)) <= 1; a closed one needs
// deg(x1) == 0. No inner vertex may occur more than twice at inner positions.
std::vector<ChainViolation> ValidatePChain(const Factor& r, const PChain& c);

class ChainError : public std::runtime_error {
 public:
  explicit ChainError(std::vector<ChainViolation> violations);
  const std::vector<ChainViolation>& violations() const { return violations_; }

 private:
  std::vector<ChainViolation> violations_;
};

// r XOR E(c). Throws ChainError if c is not a valid P-chain for r.
Factor ApplyPChain(const Factor& r, const PChain& c);

// Resolves consecutive vertex pairs to edge ids. Throws GraphError when a
// pair is not adjacent or a vertex is out of range.
PChain ChainFromVertices(const Graph& g, std::span<const Vertex> vertices);

// Reusable scratch space for the searches. Marks are epoch-stamped so each
// search starts from a clean slate in O(1).
class ChainSearch {
 public:
  explicit ChainSearch(const Graph& g);

  // Edge-marking DFS from `start`: odd steps take an unmarked non-factor
  // edge, even steps an unmarked factor edge, neighbors in ascending order.
  // Accepts on reaching y with deg(y) == 0, or deg(y) == 1 and y != start.
  // Marks are never cleared during the call, so each edge is examined at most
  // once and a successful chain may be missed. Throws std::invalid_argument if
  // deg(start) > 1.
  std::optional<PChain> Dfs(const Factor& r, Vertex start);

  // Complete backtracking over alternating trails from every vertex with
  // deg <= 1 (ascending). Marks are released on backtrack. Returns a chain iff
  // one exists; worst-case exponential.
  std::optional<PChain> Exhaustive(const Factor& r);

  // Exhaustive search restricted to one start vertex.
  std::optional<PChain> ExhaustiveFrom(const Factor& r, Vertex start);

  // Edge visits over the lifetime of this object.
  std::uint64_t edges_examined() const { return edges_examined_; }

 private:
  bool Accepts(const Factor& r, Vertex start, Vertex y) const {
    return r.degree(y) == 0 || (r.degree(y) == 1 && y != start);
  }
  void NextEpoch();
  bool marked(EdgeId e) const { return edge_mark_[e] == epoch_; }

  const Graph* graph_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> edge_mark_;
  std::vector<std::uint32_t> cursor_epoch_;
  std::vector<std::uint32_t> free_cursor_;
  std::vector<std::uint32_t> factor_cursor_;
  std::uint64_t edges_examined_ = 0;
};

std::optional<PChain> FindPChainDfs(const Factor& r, Vertex start);
std::optional<PChain> FindPChainExhaustive(const Factor& r);

}  // namespace twofactor

#endif  // TWOFACTOR_PCHAIN_H_
