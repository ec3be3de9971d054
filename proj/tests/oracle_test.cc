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

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace twofactor {
namespace {

using ::twofactor::testing::NaiveMaxTwoMatching;
using ::twofactor::testing::RandomFactor;

TEST(BruteForceTest, StarK13) {
  const Graph g = GenerateNamed("star", std::vector{3});
  ASSERT_EQ(NaiveMaxTwoMatching(g), 2);
  const OracleResult r = BruteForceCharNumber(g);
  EXPECT_EQ(r.max_edges, 2);
  EXPECT_EQ(r.min_ts, 4);
  EXPECT_EQ(r.witness.size(), 2);
}

TEST(BruteForceTest, CycleAndPath) {
  const OracleResult c5 = BruteForceCharNumber(GenerateNamed("cycle", std::vector{5}));
  EXPECT_EQ(c5.max_edges, 5);
  EXPECT_EQ(c5.min_ts, 0);
  const OracleResult p4 = BruteForceCharNumber(GenerateNamed("path", std::vector{4}));
  EXPECT_EQ(p4.max_edges, 3);
  EXPECT_EQ(p4.min_ts, 2);
}

TEST(BruteForceTest, AgreesWithIndependentEnumerations) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = GenerateRandom(3 + seed % 7, 0.5, seed);
    if (g.num_edges() > 20) continue;
    const OracleResult bb = BruteForceCharNumber(g);
    const OracleResult plain = EnumerateSubsets(g);
    const int naive = NaiveMaxTwoMatching(g);
    EXPECT_EQ(bb.max_edges, naive);
    EXPECT_EQ(plain.max_edges, naive);
    EXPECT_EQ(bb.min_ts, 2 * g.num_vertices() - 2 * bb.max_edges);
    EXPECT_EQ(bb.witness.characteristic_number(), bb.min_ts);
    EXPECT_EQ(plain.witness.characteristic_number(), plain.min_ts);
    EXPECT_EQ(Revalidate(bb.witness), bb.witness);
  }
}

TEST(BruteForceTest, NamedFixtures) {
  for (const Graph& g : testing::NamedFixtures()) {
    EXPECT_EQ(BruteForceCharNumber(g).max_edges, NaiveMaxTwoMatching(g));
  }
  EXPECT_EQ(BruteForceCharNumber(GenerateNamed("petersen")).min_ts, 0);
  EXPECT_EQ(BruteForceCharNumber(GenerateNamed("fig1")).min_ts, 0);
}

TEST(BruteForceTest, Guards) {
  EXPECT_THROW(EnumerateSubsets(GenerateNamed("complete", std::vector{8})),
               OracleGuardError);  // 28 edges
  EXPECT_NO_THROW(BruteForceCharNumber(GenerateNamed("complete", std::vector{8})));
  EXPECT_THROW(BruteForceCharNumber(GenerateNamed("complete", std::vector{12})),
               OracleGuardError);  // 66 edges
}

TEST(DecomposeSymmetricDifferenceTest, EqualFactorsGiveNothing) {
  const Graph g = GenerateNamed("fig1");
  const Factor r = testing::Example1Factor(g);
  EXPECT_TRUE(DecomposeSymmetricDifference(r, r).empty());
}

TEST(DecomposeSymmetricDifferenceTest, NullAgainstFullCycle) {
  const Graph c5 = GenerateNamed("cycle", std::vector{5});
  const Factor null = Factor::Null(c5);
  const Factor full = Factor::FromEdges(c5, std::vector<EdgeId>{0, 1, 2, 3, 4});
  const auto chains = DecomposeSymmetricDifference(null, full);
  int second_edges = 0;
  int first_edges = 0;
  for (const auto& c : chains) {
    second_edges += c.count_second();
    first_edges += c.count_first();
    EXPECT_EQ(c.form, ChainForm::kSecondEnds);
    EXPECT_EQ(ClassifyChain(c, null, full), ChainForm::kSecondEnds);
    EXPECT_TRUE(ValidatePChain(null, AsPChain(c)).empty());
  }
  EXPECT_EQ(second_edges, 5);
  EXPECT_EQ(first_edges, 0);
}

TEST(DecomposeSymmetricDifferenceTest, WorkedExampleFactors) {
  const Graph g = GenerateNamed("fig1");
  const Factor r = testing::Example1Factor(g);
  const Factor r3 = testing::FactorFromPaths(
      g, {{1, 5, 12, 13, 16, 2, 1}, {3, 14, 15, 11, 10, 9, 6, 7, 8, 4, 3}});
  const auto chains = DecomposeSymmetricDifference(r, r3);
  int form1 = 0;
  int first = 0;
  int second = 0;
  for (const auto& c : chains) {
    EXPECT_EQ(ClassifyChain(c, r, r3), c.form);
    first += c.count_first();
    second += c.count_second();
    if (c.form == ChainForm::kSecondEnds && !c.circuit) {
      ++form1;
      EXPECT_TRUE(ValidatePChain(r, AsPChain(c)).empty());
    }
  }
  EXPECT_EQ(second - first, r3.size() - r.size());
  // The ts gap is 6, so at least three form-1 chains must appear.
  EXPECT_GE(form1, 3);
}

TEST(DecomposeSymmetricDifferenceTest, AlternatingCircuitBetweenTwoFactors) {
  // Two 2-factors of K4 differ on an alternating 4-cycle with no termini.
  const Graph k4 = GenerateNamed("complete", std::vector{4});
  const PChain a = ChainFromVertices(k4, std::vector{0, 1, 2, 3, 0});
  const PChain b = ChainFromVertices(k4, std::vector{0, 2, 1, 3, 0});
  const Factor ra = Factor::FromEdges(k4, a.edges);
  const Factor rb = Factor::FromEdges(k4, b.edges);
  const auto chains = DecomposeSymmetricDifference(ra, rb);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_TRUE(chains[0].circuit);
  EXPECT_EQ(chains[0].edges.size(), 4u);
  EXPECT_EQ(ClassifyChain(chains[0], ra, rb), ChainForm::kMixed);
}

TEST(ClassifyChainTest, DegenerateAndMixedForms) {
  const Graph edge = GenerateNamed("path", std::vector{2});
  const Factor null = Factor::Null(edge);
  const Factor one = Factor::FromEdges(edge, std::vector<EdgeId>{0});
  const AlternatingChain single{{0, 1}, {0}, {false}, ChainForm::kSecondEnds};
  EXPECT_EQ(ClassifyChain(single, null, one), ChainForm::kSecondEnds);
  const AlternatingChain reversed{{0, 1}, {0}, {true}, ChainForm::kFirstEnds};
  EXPECT_EQ(ClassifyChain(reversed, one, null), ChainForm::kFirstEnds);

  const Graph p3 = GenerateNamed("path", std::vector{3});
  const Factor left = Factor::FromEdges(p3, std::vector<EdgeId>{0});
  const Factor right = Factor::FromEdges(p3, std::vector<EdgeId>{1});
  const AlternatingChain mixed{{0, 1, 2}, {0, 1}, {true, false}, ChainForm::kMixed};
  EXPECT_EQ(ClassifyChain(mixed, left, right), ChainForm::kMixed);

  const AlternatingChain not_alternating{{0, 1, 2}, {0, 1}, {true, true}};
  EXPECT_THROW(ClassifyChain(not_alternating, left, right), MalformedChainError);
  const AlternatingChain outside{{0, 1}, {0}, {false}};
  EXPECT_THROW(ClassifyChain(outside, left, left), MalformedChainError);
}

TEST(DecomposeSymmetricDifferenceTest, RandomPairsConserveEdgesAndContainForm1) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = GenerateRandom(2 + trial % 9, 0.5, 9000 + trial);
    Factor r = RandomFactor(g, 0.5, rng);
    Factor r2 = RandomFactor(g, 0.9, rng);
    if (r2.characteristic_number() > r.characteristic_number()) std::swap(r, r2);
    const auto chains = DecomposeSymmetricDifference(r, r2);
    std::vector<int> seen(g.num_edges(), 0);
    bool has_form1 = false;
    for (const auto& c : chains) {
      EXPECT_EQ(ClassifyChain(c, r, r2), c.form);
      for (EdgeId e : c.edges) ++seen[e];
      if (c.form == ChainForm::kSecondEnds && !c.circuit) {
        has_form1 = true;
        EXPECT_TRUE(ValidatePChain(r, AsPChain(c)).empty());
      }
      if (c.form == ChainForm::kFirstEnds) {
        EXPECT_TRUE(ValidatePChain(r2, AsPChain(c)).empty());
      }
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EXPECT_EQ(seen[e], r.contains(e) != r2.contains(e) ? 1 : 0);
    }
    if (r2.characteristic_number() < r.characteristic_number()) {
      ++checked;
      EXPECT_TRUE(has_form1) << EmitEdgeList(g) << EmitFactor(r) << EmitFactor(r2);
    }
  }
  EXPECT_GT(checked, 200);
}

}  // namespace
}  // namespace twofactor
