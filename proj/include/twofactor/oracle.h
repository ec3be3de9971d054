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

#ifndef TWOFACTOR_ORACLE_H_
#define TWOFACTOR_ORACLE_H_

#include <stdexcept>
#include <vector>

#include "twofactor/factor.h"
#include "twofactor/graph.h"
#include "twofactor/pchain.h"

namespace twofactor {

// Edge-count limits for the two exact oracles.
inline constexpr int kSubsetEnumerationLimit = 24;
inline constexpr int kBranchAndBoundLimit = 60;

class OracleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  int max_edges = 0;  // size of a maximum simple 2-matching
  int min_ts = 0;     // 2n - 2 * max_edges
  Factor witness;
};

// Exact optimum by depth-first include/exclude over edge ids with degree
// pruning and a capacity bound. Throws OracleGuardError above
// kBranchAndBoundLimit edges.
OracleResult BruteForceCharNumber(const Graph& g);

// Plain 2^|E| subset scan; the witness is the lowest-mask optimum. Throws
// OracleGuardError above kSubsetEnumerationLimit edges.
OracleResult EnumerateSubsets(const Graph& g);

// End-edge ownership of a chain in the symmetric difference of two factors
// `first` (R) and `second` (R').
enum class ChainForm {
  kSecondEnds = 1,  // both end-edges from R'; a P-chain for R
  kFirstEnds = 2,   // both end-edges from R; a P-chain for R'
  kMixed = 3,
};

struct AlternatingChain {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  std::vector<bool> in_first;  // per edge: true for R, false for R'
  ChainForm form = ChainForm::kMixed;
  // Closed alternating circuit through vertices of degree two in both
  // factors. It has no end-edges and is always tagged kMixed.
  bool circuit = false;

  int count_first() const;
  int count_second() const;
};

// Partitions E(first) XOR E(second) into alternating chains.
//
// Classification uses the degrees in the two factors: a vertex is a terminus
// if its degree is <= 1 in either; an R-edge ends at v when deg_R'(v) <= 1
// and an R'-edge ends at v when deg_R(v) <= 1. At each vertex the edges that
// cannot end there are paired, in ascending id order, with the lowest-id
// unpaired edge of the other factor; the rest are chain ends. Chains are
// peeled from the lowest terminus and lowest end-edge first; whatever is left
// is a union of closed alternating circuits, peeled from the lowest edge id.
// Throws FactorError if the factors are on different graphs.
std::vector<AlternatingChain> DecomposeSymmetricDifference(const Factor& first,
                                                           const Factor& second);

class MalformedChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Recomputes the form of `c` from the two factors, checking alternation, edge
// ownership, end-edge status, and the length/count relation of the form.
ChainForm ClassifyChain(const AlternatingChain& c, const Factor& first,
                        const Factor& second);

// The chain read as a P-chain candidate with respect to `first`.
PChain AsPChain(const AlternatingChain& c);

}  // namespace twofactor

#endif  // TWOFACTOR_ORACLE_H_
