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

#include "twofactor/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace twofactor {
namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g)
      : g_(g),
        deg_(g.num_vertices(), 0),
        remaining_(g.num_vertices(), 0),
        chosen_(g.num_edges(), 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) remaining_[v] = g.degree(v);
  }

  std::vector<EdgeId> Solve() {
    Search(0, 0);
    return best_edges_;
  }

 private:
  // No 2-matching has more than n edges, and each vertex can still absorb at
  // most min(2 - deg, undecided incident edges).
  int Bound(int count) const {
    int capacity = 0;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      capacity += std::min(2 - deg_[v], remaining_[v]);
    }
    return count + capacity / 2;
  }

  void Search(EdgeId next, int count) {
    if (count > best_) {
      best_ = count;
      best_edges_.clear();
      for (EdgeId e = 0; e < next; ++e) {
        if (chosen_[e]) best_edges_.push_back(e);
      }
    }
    if (next == g_.num_edges() || best_ == g_.num_vertices()) return;
    if (Bound(count) <= best_) return;
    const Edge& e = g_.edge(next);
    --remaining_[e.u];
    --remaining_[e.v];
    if (deg_[e.u] < 2 && deg_[e.v] < 2) {
      ++deg_[e.u];
      ++deg_[e.v];
      chosen_[next] = 1;
      Search(next + 1, count + 1);
      chosen_[next] = 0;
      --deg_[e.u];
      --deg_[e.v];
    }
    Search(next + 1, count);
    ++remaining_[e.u];
    ++remaining_[e.v];
  }

  const Graph& g_;
  std::vector<int> deg_;
  std::vector<int> remaining_;
  std::vector<char> chosen_;
  int best_ = -1;
  std::vector<EdgeId> best_edges_;
};

bool EndsAt(const Factor& first, const Factor& second, EdgeId e, Vertex v) {
  // An R-edge may end where R' is deficient, an R'-edge where R is.
  return first.contains(e) ? second.degree(v) <= 1 : first.degree(v) <= 1;
}

}  // namespace

OracleResult BruteForceCharNumber(const Graph& g) {
  if (g.num_edges() > kBranchAndBoundLimit) {
    throw OracleGuardError("graph has " + std::to_string(g.num_edges()) +
                           " edges; oracle limit is " +
                           std::to_string(kBranchAndBoundLimit));
  }
  const auto edges = BranchAndBound(g).Solve();
  const int max_edges = static_cast<int>(edges.size());
  return {max_edges, 2 * g.num_vertices() - 2 * max_edges,
          Factor::FromEdges(g, edges)};
}

OracleResult EnumerateSubsets(const Graph& g) {
  const int m = g.num_edges();
  if (m > kSubsetEnumerationLimit) {
    throw OracleGuardError("graph has " + std::to_string(m) +
                           " edges; subset enumeration limit is " +
                           std::to_string(kSubsetEnumerationLimit));
  }
  std::vector<int> deg(g.num_vertices());
  int best = -1;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    std::fill(deg.begin(), deg.end(), 0);
    bool feasible = true;
    for (EdgeId e = 0; e < m && feasible; ++e) {
      if (!(mask >> e & 1U)) continue;
      feasible = ++deg[g.edge(e).u] <= 2 && ++deg[g.edge(e).v] <= 2;
    }
    if (feasible) {
      best = size;
      best_mask = mask;
    }
  }
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < m; ++e) {
    if (best_mask >> e & 1U) ids.push_back(e);
  }
  return {best, 2 * g.num_vertices() - 2 * best, Factor::FromEdges(g, ids)};
}

int AlternatingChain::count_first() const {
  return static_cast<int>(std::count(in_first.begin(), in_first.end(), true));
}

int AlternatingChain::count_second() const {
  return static_cast<int>(in_first.size()) - count_first();
}

std::vector<AlternatingChain> DecomposeSymmetricDifference(
    const Factor& first, const Factor& second) {
  if (&first.graph() != &second.graph()) {
    throw FactorError("factors belong to different graphs");
  }
  const Graph& g = first.graph();
  const int m = g.num_edges();
  std::vector<char> in_q(m, 0);
  for (EdgeId e = 0; e < m; ++e) in_q[e] = first.contains(e) != second.contains(e);

  // partner[2e + side] is the edge that continues e at its endpoint on
  // `side` (0 = u, 1 = v), or -1 when e ends there.
  std::vector<EdgeId> partner(2 * static_cast<std::size_t>(m), -1);
  auto slot = [&](EdgeId e, Vertex v) {
    return 2 * static_cast<std::size_t>(e) + (g.edge(e).u == v ? 0 : 1);
  };
  std::vector<Vertex> termini;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<EdgeId> local;
    for (const Incidence& inc : g.neighbors(v)) {
      if (in_q[inc.edge]) local.push_back(inc.edge);
    }
    std::sort(local.begin(), local.end());
    std::vector<char> paired(local.size(), 0);
    for (std::size_t i = 0; i < local.size(); ++i) {
      if (paired[i] || EndsAt(first, second, local[i], v)) continue;
      std::size_t j = 0;
      for (; j < local.size(); ++j) {
        if (!paired[j] && j != i &&
            first.contains(local[j]) != first.contains(local[i])) {
          break;
        }
      }
      if (j == local.size()) {
        throw std::logic_error("no alternating partner for edge " +
                               std::to_string(local[i]) + " at vertex " +
                               std::to_string(v));
      }
      paired[i] = paired[j] = 1;
      partner[slot(local[i], v)] = local[j];
      partner[slot(local[j], v)] = local[i];
    }
    if (std::find(paired.begin(), paired.end(), 0) != paired.end()) {
      termini.push_back(v);
    }
  }

  std::vector<char> used(m, 0);
  std::vector<AlternatingChain> chains;
  auto trace = [&](Vertex start, EdgeId e, bool circuit) {
    AlternatingChain c;
    c.circuit = circuit;
    c.vertices.push_back(start);
    Vertex at = start;
    while (true) {
      used[e] = 1;
      c.edges.push_back(e);
      c.in_first.push_back(first.contains(e));
      at = g.Other(e, at);
      c.vertices.push_back(at);
      const EdgeId next = partner[slot(e, at)];
      if (next < 0 || used[next]) break;
      e = next;
    }
    if (!circuit) {
      const bool head = c.in_first.front();
      const bool tail = c.in_first.back();
      c.form = head != tail ? ChainForm::kMixed
               : head       ? ChainForm::kFirstEnds
                            : ChainForm::kSecondEnds;
    }
    chains.push_back(std::move(c));
  };

  for (Vertex v : termini) {
    std::vector<EdgeId> ends;
    for (const Incidence& inc : g.neighbors(v)) {
      if (in_q[inc.edge] && partner[slot(inc.edge, v)] < 0) {
        ends.push_back(inc.edge);
      }
    }
    std::sort(ends.begin(), ends.end());
    for (EdgeId e : ends) {
      if (!used[e]) trace(v, e, /*circuit=*/false);
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (in_q[e] && !used[e]) trace(g.edge(e).u, e, /*circuit=*/true);
  }
  return chains;
}

ChainForm ClassifyChain(const AlternatingChain& c, const Factor& first,
                        const Factor& second) {
  const Graph& g = first.graph();
  const std::size_t k = c.edges.size();
  if (k == 0 || c.vertices.size() != k + 1 || c.in_first.size() != k) {
    throw MalformedChainError("chain shape is inconsistent");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const EdgeId e = c.edges[i];
    if (e < 0 || e >= g.num_edges()) {
      throw MalformedChainError("unknown edge id " + std::to_string(e));
    }
    if (first.contains(e) == second.contains(e)) {
      throw MalformedChainError("edge " + std::to_string(e) +
                                " is not in the symmetric difference");
    }
    if (first.contains(e) != c.in_first[i]) {
      throw MalformedChainError("edge " + std::to_string(e) +
                                " has the wrong owner tag");
    }
    const Edge& ends = g.edge(e);
    const Vertex a = c.vertices[i];
    const Vertex b = c.vertices[i + 1];
    if (!((ends.u == a && ends.v == b) || (ends.u == b && ends.v == a))) {
      throw MalformedChainError("edge " + std::to_string(e) +
                                " does not join its listed vertices");
    }
    if (i > 0 && c.in_first[i] == c.in_first[i - 1]) {
      throw MalformedChainError("chain does not alternate at position " +
                                std::to_string(i + 1));
    }
  }
  const int first_count = c.count_first();
  const int second_count = c.count_second();
  if (c.circuit) {
    if (c.vertices.front() != c.vertices.back() ||
        c.in_first.front() == c.in_first.back()) {
      throw MalformedChainError("circuit does not close alternately");
    }
    return ChainForm::kMixed;
  }
  if (!EndsAt(first, second, c.edges.front(), c.vertices.front()) ||
      !EndsAt(first, second, c.edges.back(), c.vertices.back())) {
    throw MalformedChainError("chain is not bounded by end-edges");
  }
  ChainForm form;
  if (c.in_first.front() != c.in_first.back()) {
    form = ChainForm::kMixed;
    if (k % 2 != 0 || first_count != second_count) {
      throw MalformedChainError("mixed chain must be even with equal counts");
    }
  } else if (c.in_first.front()) {
    form = ChainForm::kFirstEnds;
    if (k % 2 != 1 || first_count <= second_count) {
      throw MalformedChainError("form-2 chain must be odd with more R-edges");
    }
  } else {
    form = ChainForm::kSecondEnds;
    if (k % 2 != 1 || first_count >= second_count) {
      throw MalformedChainError("form-1 chain must be odd with more R'-edges");
    }
  }
  return form;
}

PChain AsPChain(const AlternatingChain& c) { return {c.vertices, c.edges}; }

}  // namespace twofactor
