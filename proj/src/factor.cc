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

#include "twofactor/factor.h"

#include <algorithm>

namespace twofactor {
namespace {

// Factor neighbors of v, ascending by neighbor id.
std::vector<Vertex> FactorNeighbors(const Factor& r, Vertex v) {
  std::vector<Vertex> out;
  for (const Incidence& inc : r.graph().neighbors(v)) {
    if (r.contains(inc.edge)) out.push_back(inc.neighbor);
  }
  return out;
}

struct WalkResult {
  std::vector<Vertex> vertices;
  bool closed = false;
};

// Follows factor edges from `start` through `next`, stopping at a vertex of
// degree one or on returning to `start`.
WalkResult Walk(const Factor& r, Vertex start, Vertex next) {
  WalkResult walk{{start}, false};
  Vertex prev = start;
  Vertex cur = next;
  while (true) {
    if (cur == start) {
      walk.closed = true;
      break;
    }
    walk.vertices.push_back(cur);
    const auto nbrs = FactorNeighbors(r, cur);
    if (nbrs.size() < 2) break;
    const Vertex step = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = step;
  }
  return walk;
}

}  // namespace

DegreeError::DegreeError(Vertex v, int degree)
    : FactorError("vertex " + std::to_string(v) + " has factor degree " +
                  std::to_string(degree) + " (> 2)"),
      vertex_(v),
      degree_(degree) {}

NotTwoFactorError::NotTwoFactorError(int characteristic_number)
    : FactorError("not a 2-factor: characteristic number is " +
                  std::to_string(characteristic_number)),
      ts_(characteristic_number) {}

Factor::Factor(const Graph& g)
    : graph_(&g),
      in_factor_(g.num_edges(), 0),
      degree_(g.num_vertices(), 0) {}

Factor Factor::Null(const Graph& g) { return Factor(g); }

Factor Factor::FromEdges(const Graph& g, std::span<const EdgeId> edge_ids) {
  Factor r(g);
  for (EdgeId e : edge_ids) {
    if (e < 0 || e >= g.num_edges()) {
      throw FactorError("edge id " + std::to_string(e) + " is not in the graph");
    }
    if (r.in_factor_[e]) {
      throw FactorError("edge id " + std::to_string(e) + " listed twice");
    }
    r.in_factor_[e] = 1;
    ++r.degree_[g.edge(e).u];
    ++r.degree_[g.edge(e).v];
    ++r.edge_count_;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (r.degree_[v] > 2) throw DegreeError(v, r.degree_[v]);
  }
  return r;
}

std::vector<EdgeId> Factor::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count_);
  for (EdgeId e = 0; e < static_cast<EdgeId>(in_factor_.size()); ++e) {
    if (in_factor_[e]) out.push_back(e);
  }
  return out;
}

Factor Factor::Xor(std::span<const EdgeId> edges) const {
  Factor out = *this;
  for (EdgeId e : edges) {
    const Edge& ends = graph_->edge(e);
    const int delta = out.in_factor_[e] ? -1 : 1;
    out.in_factor_[e] ^= 1;
    out.degree_[ends.u] += delta;
    out.degree_[ends.v] += delta;
    out.edge_count_ += delta;
  }
  for (EdgeId e : edges) {
    for (Vertex v : {graph_->edge(e).u, graph_->edge(e).v}) {
      if (out.degree_[v] > 2 || out.degree_[v] < 0) {
        throw DegreeError(v, out.degree_[v]);
      }
    }
  }
  return out;
}

int CountDeficiency(const Factor& r) {
  int ts = 0;
  for (Vertex v = 0; v < r.num_vertices(); ++v) ts += 2 - r.degree(v);
  return ts;
}

Factor Revalidate(const Factor& r) {
  const auto ids = r.edge_ids();
  Factor fresh = Factor::FromEdges(r.graph(), ids);
  for (Vertex v = 0; v < r.num_vertices(); ++v) {
    if (fresh.degree(v) != r.degree(v)) {
      throw FactorError("cached degree of vertex " + std::to_string(v) +
                        " is stale");
    }
  }
  if (CountDeficiency(fresh) != r.characteristic_number()) {
    throw FactorError("cached characteristic number is stale");
  }
  return fresh;
}

FactorDecomposition Decompose(const Factor& r) {
  FactorDecomposition out;
  const int n = r.num_vertices();
  std::vector<char> seen(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) continue;
    if (r.degree(v) == 0) {
      seen[v] = 1;
      out.isolated.push_back(v);
      continue;
    }
    // v is the lowest vertex of its component. Walking from v in both
    // directions either closes a cycle or reaches the two path ends.
    const auto nbrs = FactorNeighbors(r, v);
    WalkResult walk = Walk(r, v, nbrs[0]);
    std::vector<Vertex> forward = std::move(walk.vertices);
    if (walk.closed) {
      for (Vertex u : forward) seen[u] = 1;
      out.cycles.push_back(std::move(forward));
      continue;
    }
    std::vector<Vertex> path;
    if (nbrs.size() == 2) {
      std::vector<Vertex> backward = Walk(r, v, nbrs[1]).vertices;
      path.assign(backward.rbegin(), backward.rend());
      path.insert(path.end(), forward.begin() + 1, forward.end());
    } else {
      path = std::move(forward);
    }
    if (path.back() < path.front()) std::reverse(path.begin(), path.end());
    for (Vertex u : path) seen[u] = 1;
    out.paths.push_back(std::move(path));
  }
  return out;
}

std::vector<std::vector<Vertex>> ExtractTwoFactor(const Factor& r) {
  if (r.characteristic_number() != 0) {
    throw NotTwoFactorError(r.characteristic_number());
  }
  return Decompose(r).cycles;
}

std::string EmitFactor(const Factor& r) {
  std::vector<Edge> edges;
  for (EdgeId e : r.edge_ids()) edges.push_back(r.graph().edge(e));
  std::sort(edges.begin(), edges.end());
  std::string out = std::to_string(r.num_vertices()) + "\n";
  for (const Edge& e : edges) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Factor ParseFactor(const Graph& g, std::string_view text) {
  const Graph listed = ParseEdgeList(text);
  if (listed.num_vertices() != g.num_vertices()) {
    throw ParseError(0, "factor header declares " +
                            std::to_string(listed.num_vertices()) +
                            " vertices, host graph has " +
                            std::to_string(g.num_vertices()));
  }
  std::vector<EdgeId> ids;
  ids.reserve(listed.num_edges());
  for (const Edge& e : listed.edges()) {
    const auto id = g.FindEdge(e.u, e.v);
    if (!id) {
      throw ParseError(0, "factor edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) +
                              ") is not an edge of the graph");
    }
    ids.push_back(*id);
  }
  return Factor::FromEdges(g, ids);
}

Factor GreedyFactor(const Graph& g) {
  std::vector<int> deg(g.num_vertices(), 0);
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ends = g.edge(e);
    if (deg[ends.u] < 2 && deg[ends.v] < 2) {
      ++deg[ends.u];
      ++deg[ends.v];
      ids.push_back(e);
    }
  }
  return Factor::FromEdges(g, ids);
}

}  // namespace twofactor
