// Copyright 2026 The domforce Authors
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

#include <gtest/gtest.h>

#include <bit>
#include <optional>

#include "domforce/domination.hpp"
#include "domforce/errors.hpp"
#include "domforce/generators.hpp"
#include "support/oracles.hpp"

namespace domforce {
namespace {

Graph family(Family f, std::vector<int> p) { return generate({f, std::move(p)}); }

// Lexicographically first minimum dominating set by scanning every subset.
VertexSet lex_first_dominating(const Graph& g, int size) {
  std::optional<VertexSet> best;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    if (std::popcount(m) != size) continue;
    VertexSet s = VertexSet::from_mask(g.order(), m);
    if (!is_dominating_set(g, s)) continue;
    if (!best || lex_less(s, *best)) best = s;
  }
  return best.value();
}

TEST(IsDominatingSet, Examples) {
  EXPECT_TRUE(is_dominating_set(family(Family::cycle, {5}), VertexSet(5, {0, 1, 3})));
  for (Vertex v = 0; v < 6; ++v) {
    EXPECT_TRUE(is_dominating_set(family(Family::complete, {6}), VertexSet(6, {v})));
  }
  EXPECT_FALSE(is_dominating_set(family(Family::path, {4}), VertexSet(4, {0})));
  EXPECT_FALSE(is_dominating_set(family(Family::path, {4}), VertexSet(4)));
}

TEST(DominationNumber, Examples) {
  EXPECT_EQ(domination_number(family(Family::path, {6})).value, 2);
  EXPECT_EQ(domination_number(family(Family::cycle, {7})).value, 3);
  EXPECT_EQ(domination_number(family(Family::helm, {8})).value, 8);
  EXPECT_EQ(domination_number(splitting(family(Family::ladder, {4}))).value, 4);
  EXPECT_EQ(domination_number(family(Family::path, {1})).value, 1);
}

TEST(DominationNumber, DisconnectedInput) {
  Graph g = build_graph(5, {{0, 1}, {2, 3}});
  InvariantResult r = domination_number(g);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.witness, VertexSet(5, {0, 2, 4}));
}

TEST(DominationNumber, WitnessIsMinimalAndCertified) {
  for (const auto& [name, g] : testing::property_corpus()) {
    InvariantResult r = domination_number(g);
    ASSERT_EQ(r.invariant, Invariant::domination);
    ASSERT_EQ(r.witness.size(), r.value) << name;
    EXPECT_TRUE(is_dominating_set(g, r.witness)) << name;
    for (Vertex v : r.witness.members()) {
      VertexSet smaller = r.witness;
      smaller.erase(v);
      EXPECT_FALSE(is_dominating_set(g, smaller)) << name;
    }
  }
}

TEST(DominationNumber, MatchesBruteForceValue) {
  for (const auto& [name, g] : testing::property_corpus()) {
    if (g.order() > 16) continue;
    EXPECT_EQ(domination_number(g).value, testing::brute_domination(g)) << name;
  }
}

TEST(DominationNumber, WitnessIsLexicographicallyFirst) {
  for (const auto& [name, g] : testing::property_corpus()) {
    if (g.order() > 12) continue;
    InvariantResult r = domination_number(g);
    EXPECT_EQ(r.witness, lex_first_dominating(g, r.value)) << name;
  }
}

TEST(DominationNumber, RespectsCap) {
  EXPECT_THROW(domination_number(family(Family::path, {27})), CapExceeded);
  SolverLimits roomy;
  roomy.max_order = 40;
  EXPECT_EQ(domination_number(family(Family::path, {40}), roomy).value, 14);
}

}  // namespace
}  // namespace domforce
