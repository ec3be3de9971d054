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
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace twofactor {
namespace {

using ::twofactor::testing::Example1Factor;
using ::twofactor::testing::FactorFromPaths;
using ::twofactor::testing::RandomFactor;
using ::twofactor::testing::ZeroBased;

TEST(NullFactorTest, CharacteristicNumberIsTwiceN) {
  EXPECT_EQ(Factor::Null(GenerateNamed("cycle", std::vector{5}))
                .characteristic_number(),
            10);
  const Graph empty = Graph::FromEdges(0, {});
  EXPECT_EQ(Factor::Null(empty).characteristic_number(), 0);
  EXPECT_EQ(Factor::Null(GenerateNamed("fig1")).characteristic_number(), 32);
}

TEST(FromEdgesTest, Example1FactorHasTsSix) {
  const Graph g = GenerateNamed("fig1");
  const Factor r = Example1Factor(g);
  EXPECT_EQ(r.characteristic_number(), 6);
  EXPECT_EQ(CountDeficiency(r), 6);
  EXPECT_EQ(r.degree(15), 0);  // vertex 16
}

TEST(FromEdgesTest, DegreeThreeNamesVertex) {
  const Graph star = GenerateNamed("star", std::vector{3});
  try {
    Factor::FromEdges(star, std::vector<EdgeId>{0, 1, 2});
    FAIL();
  } catch (const DegreeError& e) {
    EXPECT_EQ(e.vertex(), 0);
    EXPECT_EQ(e.degree(), 3);
  }
}

TEST(FromEdgesTest, FullCycleIsTwoFactor) {
  const Graph c5 = GenerateNamed("cycle", std::vector{5});
  const Factor r = Factor::FromEdges(c5, std::vector<EdgeId>{0, 1, 2, 3, 4});
  EXPECT_EQ(r.characteristic_number(), 0);
}

TEST(FromEdgesTest, UnknownOrRepeatedEdge) {
  const Graph c5 = GenerateNamed("cycle", std::vector{5});
  EXPECT_THROW(Factor::FromEdges(c5, std::vector<EdgeId>{5}), FactorError);
  EXPECT_THROW(Factor::FromEdges(c5, std::vector<EdgeId>{-1}), FactorError);
  EXPECT_THROW(Factor::FromEdges(c5, std::vector<EdgeId>{1, 1}), FactorError);
}

TEST(CharacteristicNumberTest, SingleEdgeOnFourVertices) {
  const Graph p4 = GenerateNamed("path", std::vector{4});
  EXPECT_EQ(Factor::FromEdges(p4, std::vector<EdgeId>{1})
                .characteristic_number(),
            6);
}

TEST(CharacteristicNumberTest, PropertiesOnRandomFactors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = GenerateRandom(2 + trial % 11, 0.5, trial);
    const Factor r = RandomFactor(g, 0.7, rng);
    const int ts = r.characteristic_number();
    EXPECT_EQ(ts % 2, 0);
    EXPECT_EQ(ts, CountDeficiency(r));
    EXPECT_EQ(ts, 2 * g.num_vertices() - 2 * r.size());
    EXPECT_GE(ts, 0);
    EXPECT_LE(ts, 2 * g.num_vertices());

    const FactorDecomposition parts = Decompose(r);
    EXPECT_EQ(static_cast<int>(parts.paths.size() + parts.isolated.size()),
              ts / 2);
    std::vector<int> covered(g.num_vertices(), 0);
    for (const auto& c : parts.cycles) {
      EXPECT_GE(c.size(), 3u);
      for (Vertex v : c) {
        ++covered[v];
        EXPECT_EQ(r.degree(v), 2);
      }
    }
    for (const auto& p : parts.paths) {
      EXPECT_GE(p.size(), 2u);
      EXPECT_EQ(r.degree(p.front()), 1);
      EXPECT_EQ(r.degree(p.back()), 1);
      for (Vertex v : p) ++covered[v];
    }
    for (Vertex v : parts.isolated) ++covered[v];
    EXPECT_TRUE(std::all_of(covered.begin(), covered.end(),
                            [](int c) { return c == 1; }));
  }
}

TEST(XorTest, RejectsOverfullResultAndLeavesInputIntact) {
  const Graph star = GenerateNamed("star", std::vector{3});
  const Factor r = Factor::FromEdges(star, std::vector<EdgeId>{0, 1});
  EXPECT_THROW(r.Xor(std::vector<EdgeId>{2}), DegreeError);
  EXPECT_EQ(r.size(), 2);
  const Factor s = r.Xor(std::vector<EdgeId>{1, 2});
  EXPECT_EQ(s.edge_ids(), (std::vector<EdgeId>{0, 2}));
  EXPECT_EQ(Revalidate(s), s);
}

TEST(DecomposeTest, Example1Factor) {
  const Graph g = GenerateNamed("fig1");
  const FactorDecomposition parts = Decompose(Example1Factor(g));
  EXPECT_TRUE(parts.cycles.empty());
  ASSERT_EQ(parts.paths.size(), 2u);
  EXPECT_EQ(parts.paths[0], ZeroBased({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}));
  EXPECT_EQ(parts.paths[1], ZeroBased({12, 13, 14, 15}));
  EXPECT_EQ(parts.isolated, ZeroBased({16}));
}

TEST(DecomposeTest, NullFactor) {
  const Graph p4 = GenerateNamed("path", std::vector{4});
  const FactorDecomposition parts = Decompose(Factor::Null(p4));
  EXPECT_TRUE(parts.cycles.empty());
  EXPECT_TRUE(parts.paths.empty());
  EXPECT_EQ(parts.isolated, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(DecomposeTest, Example3FinalFactorIsTwoCycles) {
  const Graph g = GenerateNamed("fig1");
  const Factor r3 = FactorFromPaths(
      g, {{1, 5, 12, 13, 16, 2, 1}, {3, 14, 15, 11, 10, 9, 6, 7, 8, 4, 3}});
  EXPECT_EQ(r3.characteristic_number(), 0);
  const FactorDecomposition parts = Decompose(r3);
  EXPECT_EQ(parts.cycles.size(), 2u);
  EXPECT_TRUE(parts.paths.empty());
  EXPECT_TRUE(parts.isolated.empty());

  const auto cycles = ExtractTwoFactor(r3);
  ASSERT_EQ(cycles.size(), 2u);
  EXPECT_EQ(cycles[0], ZeroBased({1, 2, 16, 13, 12, 5}));
  EXPECT_EQ(cycles[1].size(), 10u);
}

TEST(ExtractTwoFactorTest, FullCycleAndError) {
  const Graph c5 = GenerateNamed("cycle", std::vector{5});
  const auto cycles =
      ExtractTwoFactor(Factor::FromEdges(c5, std::vector<EdgeId>{0, 1, 2, 3, 4}));
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0], (std::vector<Vertex>{0, 1, 2, 3, 4}));

  const Graph g = GenerateNamed("fig1");
  try {
    ExtractTwoFactor(Example1Factor(g));
    FAIL();
  } catch (const NotTwoFactorError& e) {
    EXPECT_EQ(e.characteristic_number(), 6);
  }
}

TEST(FactorIoTest, RoundTripAndErrors) {
  const Graph g = GenerateNamed("fig1");
  const Factor r = Example1Factor(g);
  const std::string text = EmitFactor(r);
  EXPECT_EQ(text.substr(0, 3), "16\n");
  EXPECT_EQ(ParseFactor(g, text), r);

  EXPECT_THROW(ParseFactor(g, "15\n0 1\n"), ParseError);
  EXPECT_THROW(ParseFactor(g, "16\n0 2\n"), ParseError);  // not an edge
  EXPECT_THROW(ParseFactor(g, "16\n4 3\n4 5\n4 0\n"), DegreeError);
}

TEST(GreedyFactorTest, ValidAndNoWorseThanNull) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = GenerateRandom(12, 0.3, seed);
    const Factor r = GreedyFactor(g);
    EXPECT_EQ(Revalidate(r), r);
    EXPECT_LE(r.characteristic_number(), 2 * g.num_vertices());
  }
}

}  // namespace
}  // namespace twofactor
