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

#include "twofactor/pchain.h"

#include <algorithm>
#include <limits>
#include <map>

namespace twofactor {
namespace {

std::string JoinMessages(const std::vector<ChainViolation>& violations) {
  std::string out = "invalid P-chain:";
  for (const auto& v : violations) out += " [" + v.message + "]";
  return out;
}

}  // namespace

const char* ToString(ChainViolation::Kind kind) {
  switch (kind) {
    case ChainViolation::Kind::kEmpty: return "empty";
    case ChainViolation::Kind::kShape: return "shape";
    case ChainViolation::Kind::kUnknownEdge: return "unknown-edge";
    case ChainViolation::Kind::kBrokenAdjacency: return "broken-adjacency";
    case ChainViolation::Kind::kEvenLength: return "even-length";
    case ChainViolation::Kind::kRepeatedEdge: return "repeated-edge";
    case ChainViolation::Kind::kEdgeMembership: return "edge-membership";
    case ChainViolation::Kind::kEndpointDegree: return "endpoint-degree";
    case ChainViolation::Kind::kInnerMultiplicity: return "inner-multiplicity";
  }
  return "unknown";
}

std::vector<ChainViolation> ValidatePChain(const Factor& r, const PChain& c) {
  using Kind = ChainViolation::Kind;
  std::vector<ChainViolation> out;
  const Graph& g = r.graph();
  if (c.edges.empty()) {
    out.push_back({Kind::kEmpty, "chain has no edges"});
    return out;
  }
  if (c.vertices.size() != c.edges.size() + 1) {
    out.push_back({Kind::kShape, "expected " +
                                     std::to_string(c.edges.size() + 1) +
                                     " vertices, got " +
                                     std::to_string(c.vertices.size())});
    return out;
  }
  for (Vertex v : c.vertices) {
    if (!g.contains_vertex(v)) {
      out.push_back({Kind::kShape, "vertex " + std::to_string(v) +
                                       " is not in the graph"});
      return out;
    }
  }
  for (EdgeId e : c.edges) {
    if (e < 0 || e >= g.num_edges()) {
      out.push_back({Kind::kUnknownEdge,
                     "edge id " + std::to_string(e) + " is not in the graph"});
      return out;
    }
  }

  const int k = c.length();
  for (int i = 0; i < k; ++i) {
    const Edge& e = g.edge(c.edges[i]);
    const Vertex a = c.vertices[i];
    const Vertex b = c.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      out.push_back({Kind::kBrokenAdjacency,
                     "edge " + std::to_string(i + 1) + " does not join " +
                         std::to_string(a) + " and " + std::to_string(b)});
    }
  }
  if (k % 2 == 0) {
    out.push_back({Kind::kEvenLength,
                   "length " + std::to_string(k) + " is even"});
  }
  {
    std::vector<EdgeId> sorted = c.edges;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) {
        out.push_back({Kind::kRepeatedEdge,
                       "edge id " + std::to_string(sorted[i]) + " repeats"});
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    const bool odd_position = (i % 2 == 0);
    const bool in_factor = r.contains(c.edges[i]);
    if (odd_position && in_factor) {
      out.push_back({Kind::kEdgeMembership,
                     "edge " + std::to_string(i + 1) +
                         " is at an odd position but belongs to the factor"});
    } else if (!odd_position && !in_factor) {
      out.push_back({Kind::kEdgeMembership,
                     "edge " + std::to_string(i + 1) +
                         " is at an even position but is not in the factor"});
    }
  }
  const Vertex first = c.vertices.front();
  const Vertex last = c.vertices.back();
  if (first == last) {
    if (r.degree(first) != 0) {
      out.push_back({Kind::kEndpointDegree,
                     "closed chain at vertex " + std::to_string(first) +
                         " needs degree 0, has " +
                         std::to_string(r.degree(first))});
    }
  } else {
    for (Vertex end : {first, last}) {
      if (r.degree(end) > 1) {
        out.push_back({Kind::kEndpointDegree,
                       "end vertex " + std::to_string(end) + " has degree " +
                           std::to_string(r.degree(end))});
      }
    }
  }
  std::map<Vertex, int> inner_count;
  for (int i = 1; i < k; ++i) ++inner_count[c.vertices[i]];
  for (const auto& [v, count] : inner_count) {
    if (count > 2) {
      out.push_back({Kind::kInnerMultiplicity,
                     "inner vertex " + std::to_string(v) + " occurs " +
                         std::to_string(count) + " times"});
    }
  }
  return out;
}

ChainError::ChainError(std::vector<ChainViolation> violations)
    : std::runtime_error(JoinMessages(violations)),
      violations_(std::move(violations)) {}

Factor ApplyPChain(const Factor& r, const PChain& c) {
  auto violations = ValidatePChain(r, c);
  if (!violations.empty()) throw ChainError(std::move(violations));
  return r.Xor(c.edges);
}

PChain ChainFromVertices(const Graph& g, std::span<const Vertex> vertices) {
  PChain c;
  c.vertices.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const auto e = g.FindEdge(vertices[i], vertices[i + 1]);
    if (!e) {
      throw GraphError("(" + std::to_string(vertices[i]) + ", " +
                       std::to_string(vertices[i + 1]) + ") is not an edge");
    }
    c.edges.push_back(*e);
  }
  return c;
}

ChainSearch::ChainSearch(const Graph& g)
    : graph_(&g),
      edge_mark_(g.num_edges(), 0),
      cursor_epoch_(g.num_vertices(), 0),
      free_cursor_(g.num_vertices(), 0),
      factor_cursor_(g.num_vertices(), 0) {}

void ChainSearch::NextEpoch() {
  if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(edge_mark_.begin(), edge_mark_.end(), 0);
    std::fill(cursor_epoch_.begin(), cursor_epoch_.end(), 0);
    epoch_ = 0;
  }
  ++epoch_;
}

std::optional<PChain> ChainSearch::Dfs(const Factor& r, Vertex start) {
  if (&r.graph() != graph_) {
    throw std::invalid_argument("factor belongs to a different graph");
  }
  if (!graph_->contains_vertex(start) || r.degree(start) > 1) {
    throw std::invalid_argument("DFS start vertex must have factor degree <= 1");
  }
  NextEpoch();
  PChain chain;
  chain.vertices.push_back(start);

  // The per-vertex cursors stay valid across frames because marks are
  // permanent within the call: an edge skipped once is skipped forever.
  auto next_edge = [&](Vertex x, bool want_factor) -> std::optional<EdgeId> {
    if (cursor_epoch_[x] != epoch_) {
      cursor_epoch_[x] = epoch_;
      free_cursor_[x] = 0;
      factor_cursor_[x] = 0;
    }
    auto& cursor = want_factor ? factor_cursor_[x] : free_cursor_[x];
    const auto adj = graph_->neighbors(x);
    while (cursor < adj.size()) {
      const EdgeId e = adj[cursor].edge;
      ++cursor;
      ++edges_examined_;
      if (!marked(e) && r.contains(e) == want_factor) return e;
    }
    return std::nullopt;
  };

  while (true) {
    const Vertex x = chain.vertices.back();
    const bool odd_step = chain.edges.size() % 2 == 0;
    const auto e = next_edge(x, /*want_factor=*/!odd_step);
    if (!e) {
      if (chain.edges.empty()) return std::nullopt;
      chain.edges.pop_back();
      chain.vertices.pop_back();
      continue;
    }
    edge_mark_[*e] = epoch_;
    const Vertex y = graph_->Other(*e, x);
    chain.edges.push_back(*e);
    chain.vertices.push_back(y);
    if (odd_step && Accepts(r, start, y)) return chain;
  }
}

std::optional<PChain> ChainSearch::ExhaustiveFrom(const Factor& r,
                                                  Vertex start) {
  if (&r.graph() != graph_) {
    throw std::invalid_argument("factor belongs to a different graph");
  }
  if (!graph_->contains_vertex(start) || r.degree(start) > 1) {
    return std::nullopt;
  }
  NextEpoch();
  PChain chain;
  chain.vertices.push_back(start);
  // cursor[i] is the next adjacency slot to try from chain.vertices[i].
  std::vector<std::size_t> cursor{0};

  while (true) {
    const Vertex x = chain.vertices.back();
    const bool odd_step = chain.edges.size() % 2 == 0;
    const auto adj = graph_->neighbors(x);
    std::size_t& pos = cursor.back();
    std::optional<EdgeId> found;
    while (pos < adj.size()) {
      const EdgeId e = adj[pos].edge;
      ++pos;
      ++edges_examined_;
      if (!marked(e) && r.contains(e) != odd_step) {
        found = e;
        break;
      }
    }
    if (!found) {
      if (chain.edges.empty()) return std::nullopt;
      edge_mark_[chain.edges.back()] = 0;
      chain.edges.pop_back();
      chain.vertices.pop_back();
      cursor.pop_back();
      continue;
    }
    edge_mark_[*found] = epoch_;
    const Vertex y = graph_->Other(*found, x);
    chain.edges.push_back(*found);
    chain.vertices.push_back(y);
    cursor.push_back(0);
    if (odd_step && Accepts(r, start, y)) return chain;
  }
}

std::optional<PChain> ChainSearch::Exhaustive(const Factor& r) {
  for (Vertex v = 0; v < graph_->num_vertices(); ++v) {
    if (r.degree(v) > 1) continue;
    if (auto c = ExhaustiveFrom(r, v)) return c;
  }
  return std::nullopt;
}

std::optional<PChain> FindPChainDfs(const Factor& r, Vertex start) {
  ChainSearch search(r.graph());
  return search.Dfs(r, start);
}

std::optional<PChain> FindPChainExhaustive(const Factor& r) {
  ChainSearch search(r.graph());
  return search.Exhaustive(r);
}

}  // namespace twofactor
