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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "domforce/domination.hpp"
#include "domforce/errors.hpp"
#include "domforce/forcing.hpp"
#include "domforce/generators.hpp"
#include "domforce/solvers.hpp"
#include "support/oracles.hpp"

namespace domforce {
namespace {

using ::testing::ElementsAre;

Graph family(Family f, std::vector<int> p) { return generate({f, std::move(p)}); }
Graph spec(const char* text) { return build(parse_graph_spec(text)); }

bool is_path_graph(const Graph& g) {
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return testing::induces_path(g, all);
}

BoundReport report(const std::vector<BoundReport>& rs, BoundSource source) {
  for (const auto& r : rs) {
    if (r.source == source) return r;
  }
  ADD_FAILURE() << "missing " << bound_source_name(source);
  return {};
}

bool has_report(const std::vector<BoundReport>& rs, BoundSource source) {
  for (const auto& r : rs) {
    if (r.source == source) return true;
  }
  return false;
}

TEST(ZeroForcingNumber, Examples) {
  EXPECT_EQ(zero_forcing_number(family(Family::cycle, {9})).value, 2);
  EXPECT_EQ(zero_forcing_number(family(Family::hypercube, {4})).value, 8);
  EXPECT_EQ(zero_forcing_number(family(Family::coconut_tree, {5, 3})).value, 3);
  EXPECT_EQ(zero_forcing_number(spec("split(star:4)")).value, 6);
  EXPECT_EQ(zero_forcing_number(family(Family::path, {1})).value, 1);
}

TEST(ZeroForcingNumber, DisconnectedInput) {
  Graph g = build_graph(4, {{0, 1}});
  InvariantResult r = zero_forcing_number(g);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.witness, VertexSet(4, {0, 2, 3}));
}

TEST(DomForcingNumber, KnownValues) {
  InvariantResult c5 = dom_forcing_number(family(Family::cycle, {5}));
  EXPECT_EQ(c5.value, 3);
  EXPECT_EQ(c5.witness, VertexSet(5, {0, 1, 2}));
  EXPECT_EQ(dom_forcing_number(family(Family::cycle, {16})).value, 6);
  EXPECT_EQ(dom_forcing_number(family(Family::path, {2})).value, 1);
  EXPECT_EQ(dom_forcing_number(family(Family::petersen, {})).value, 5);
  EXPECT_EQ(dom_forcing_number(family(Family::diamond_snake, {6})).value, 9);
  EXPECT_EQ(dom_forcing_number(family(Family::triangular_snake, {6})).value, 7);
  EXPECT_EQ(dom_forcing_number(family(Family::helm, {8})).value, 8);
}

TEST(Solvers, WitnessesAreCertified) {
  for (const auto& [name, g] : testing::property_corpus()) {
    InvariantResult z = zero_forcing_number(g);
    InvariantResult fd = dom_forcing_number(g);
    EXPECT_EQ(z.witness.size(), z.value) << name;
    EXPECT_EQ(fd.witness.size(), fd.value) << name;
    EXPECT_GE(z.value, 1);
    EXPECT_TRUE(is_zero_forcing_set(g, z.witness)) << name;
    EXPECT_TRUE(is_zero_forcing_set(g, fd.witness)) << name;
    EXPECT_TRUE(is_dominating_set(g, fd.witness)) << name;
  }
}

TEST(Solvers, MatchTestSideBruteForce) {
  for (const auto& [name, g] : testing::property_corpus()) {
    if (g.order() > 14) continue;
    EXPECT_EQ(zero_forcing_number(g).value, testing::brute_zero_forcing(g)) << name;
    EXPECT_EQ(dom_forcing_number(g).value, testing::brute_dom_forcing(g)) << name;
  }
}

TEST(Solvers, SandwichHolds) {
  for (const auto& [name, g] : testing::property_corpus()) {
    int z = zero_forcing_number(g).value;
    int gamma = domination_number(g).value;
    int fd = dom_forcing_number(g).value;
    EXPECT_LE(std::max(z, gamma), fd) << name;
    EXPECT_LE(fd, z + gamma) << name;
  }
}

TEST(Solvers, FdOneExactlyForShortPaths) {
  for (const auto& [name, g] : testing::exhaustive_corpus(5)) {
    bool short_path = g.order() <= 2;
    EXPECT_EQ(dom_forcing_number(g).value == 1, short_path) << name;
  }
}

TEST(Solvers, ZOneExactlyForPaths) {
  for (const auto& [name, g] : testing::exhaustive_corpus(5)) {
    EXPECT_EQ(zero_forcing_number(g).value == 1, is_path_graph(g)) << name;
  }
}

TEST(Solvers, PropagationTimeOneForcesEquality) {
  auto corpus = testing::exhaustive_corpus(5);
  corpus.push_back({"petersen", family(Family::petersen, {})});
  int pt_one = 0;
  for (const auto& [name, g] : corpus) {
    if (min_propagation_time(g).value != 1) continue;
    ++pt_one;
    EXPECT_EQ(dom_forcing_number(g).value, zero_forcing_number(g).value) << name;
  }
  EXPECT_GT(pt_one, 0);

  Graph w6 = family(Family::wheel, {6});
  EXPECT_EQ(dom_forcing_number(w6).value, zero_forcing_number(w6).value);
  EXPECT_EQ(min_propagation_time(w6).value, 2);
}

TEST(Solvers, RespectCap) {
  Graph big = family(Family::cycle, {27});
  EXPECT_THROW(zero_forcing_number(big), CapExceeded);
  EXPECT_THROW(dom_forcing_number(big), CapExceeded);
  try {
    zero_forcing_number(big);
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.order(), 27);
    EXPECT_EQ(e.cap(), kDefaultMaxOrder);
  }
  SolverLimits roomy;
  roomy.max_order = 30;
  EXPECT_EQ(zero_forcing_number(big, roomy).value, 2);
  roomy.max_order = 100;
  Graph huge = family(Family::path, {65});
  EXPECT_THROW(zero_forcing_number(huge, roomy), CapExceeded);
}

TEST(SolverLimits, ReadsEnvironment) {
  ::unsetenv(kMaxOrderEnvVar);
  EXPECT_EQ(SolverLimits::from_environment().max_order, kDefaultMaxOrder);
  ::setenv(kMaxOrderEnvVar, "12", 1);
  EXPECT_EQ(SolverLimits::from_environment().max_order, 12);
  ::setenv(kMaxOrderEnvVar, "banana", 1);
  EXPECT_THROW(SolverLimits::from_environment(), std::invalid_argument);
  ::setenv(kMaxOrderEnvVar, "65", 1);
  EXPECT_THROW(SolverLimits::from_environment(), std::invalid_argument);
  ::unsetenv(kMaxOrderEnvVar);
}

TEST(PathCover, Examples) {
  InvariantResult p9 = path_cover_number(family(Family::path, {9}));
  EXPECT_EQ(p9.value, 1);
  EXPECT_THAT(p9.paths, ElementsAre(ElementsAre(0, 1, 2, 3, 4, 5, 6, 7, 8)));
  EXPECT_EQ(path_cover_number(family(Family::star, {3})).value, 2);
  EXPECT_EQ(path_cover_number(family(Family::complete, {4})).value, 2);
  EXPECT_EQ(path_cover_number(build_graph(3, {})).value, 3);
}

TEST(PathCover, MatchesPartitionOracle) {
  for (const auto& [name, g] : testing::property_corpus()) {
    if (g.order() > 10) continue;
    InvariantResult r = path_cover_number(g);
    EXPECT_EQ(r.value, testing::brute_path_cover(g)) << name;
    EXPECT_EQ(static_cast<int>(r.paths.size()), r.value) << name;
    EXPECT_TRUE(is_induced_path_cover(g, r.paths)) << name;
  }
}

TEST(PathCover, AtMostZeroForcingNumber) {
  for (const auto& [name, g] : testing::property_corpus()) {
    if (g.order() > 12) continue;
    EXPECT_LE(path_cover_number(g).value, zero_forcing_number(g).value) << name;
  }
}

TEST(PathCover, RespectsItsOwnCap) {
  EXPECT_THROW(path_cover_number(family(Family::path, {17})), CapExceeded);
}

TEST(IsInducedPathCover, RejectsBadCovers) {
  Graph c4 = family(Family::cycle, {4});
  EXPECT_TRUE(is_induced_path_cover(c4, {{0, 1, 2}, {3}}));
  EXPECT_FALSE(is_induced_path_cover(c4, {{0, 1, 2, 3}}));   // not induced
  EXPECT_FALSE(is_induced_path_cover(c4, {{0, 2}, {1, 3}}));  // not paths
  EXPECT_FALSE(is_induced_path_cover(c4, {{0, 1}, {2}}));     // misses 3
  EXPECT_FALSE(is_induced_path_cover(c4, {{0, 1}, {1, 2}, {3}}));
  EXPECT_FALSE(is_induced_path_cover(c4, {{0, 1, 2}, {}, {3}}));
}

TEST(FdBounds, SixteenCycleRefinedBoundIsSharp) {
  auto rs = fd_bounds(family(Family::cycle, {16}));
  BoundReport refined = report(rs, BoundSource::prop_refined);
  EXPECT_EQ(refined.upper, 6);
  EXPECT_EQ(refined.lower, 6);
  BoundReport sandwich = report(rs, BoundSource::prop_sandwich);
  EXPECT_EQ(sandwich.lower, 6);
  EXPECT_EQ(sandwich.upper, 8);
  EXPECT_FALSE(has_report(rs, BoundSource::delta_bound));
  EXPECT_FALSE(has_report(rs, BoundSource::split_double));
}

TEST(FdBounds, CompleteGraphDeltaBound) {
  auto rs = fd_bounds(family(Family::complete, {5}));
  BoundReport delta = report(rs, BoundSource::delta_bound);
  EXPECT_EQ(delta.lower, 4);
  EXPECT_EQ(delta.upper, 5);
  EXPECT_EQ(dom_forcing_number(family(Family::complete, {5})).value, 4);
}

TEST(FdBounds, SplitReportDoublesFd) {
  BoundOptions opts;
  opts.include_split = true;
  auto rs = fd_bounds(family(Family::path, {5}), opts);
  BoundReport split = report(rs, BoundSource::split_double);
  EXPECT_EQ(split.lower, 1);
  EXPECT_EQ(split.upper, 4);
  EXPECT_EQ(bound_source_name(BoundSource::split_double), "split_double");
}

TEST(FdBounds, RefinedEqualsFdOnPathsAndCycles) {
  for (int n = 1; n <= 16; ++n) {
    Graph p = family(Family::path, {n});
    EXPECT_EQ(report(fd_bounds(p), BoundSource::prop_refined).upper,
              dom_forcing_number(p).value) << "path " << n;
    if (n < 3) continue;
    Graph c = family(Family::cycle, {n});
    EXPECT_EQ(report(fd_bounds(c), BoundSource::prop_refined).upper,
              dom_forcing_number(c).value) << "cycle " << n;
  }
}

TEST(FdBounds, EveryReportContainsFdOnCorpus) {
  for (const auto& [name, g] : testing::property_corpus()) {
    int fd = dom_forcing_number(g).value;
    auto rs = fd_bounds(g);
    for (const auto& r : rs) {
      EXPECT_LE(r.lower, r.upper) << name;
      EXPECT_LE(r.lower, fd) << name << " " << bound_source_name(r.source);
      EXPECT_LE(fd, r.upper) << name << " " << bound_source_name(r.source);
    }
    EXPECT_EQ(has_report(rs, BoundSource::delta_bound), g.max_degree() == g.order() - 1)
        << name;
  }
}

TEST(NaiveOracle, AgreesWithSolversOnFamiliesAndRandomGraphs) {
  auto corpus = testing::family_corpus(10);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    corpus.push_back({"random", testing::random_connected_graph(rng, 4 + i % 6, 0.3)});
  }
  for (const auto& [name, g] : corpus) {
    for (auto [inv, solve] :
         {std::pair{Invariant::zero_forcing, &zero_forcing_number},
          std::pair{Invariant::domination, &domination_number},
          std::pair{Invariant::dom_forcing, &dom_forcing_number}}) {
      InvariantResult fast = solve(g, SolverLimits{});
      InvariantResult slow = naive_oracle(g, inv);
      EXPECT_EQ(fast.value, slow.value) << name << " " << invariant_name(inv);
      EXPECT_EQ(fast.witness, slow.witness) << name << " " << invariant_name(inv);
    }
  }
}

TEST(NaiveOracle, TrivialGraphAndLimits) {
  Graph p1 = family(Family::path, {1});
  for (Invariant inv : {Invariant::zero_forcing, Invariant::domination,
                        Invariant::dom_forcing}) {
    EXPECT_EQ(naive_oracle(p1, inv).value, 1);
  }
  EXPECT_THROW(naive_oracle(family(Family::path, {13}), Invariant::zero_forcing),
               CapExceeded);
  EXPECT_THROW(naive_oracle(p1, Invariant::path_cover), std::invalid_argument);
}

TEST(InvariantNames, Stable) {
  EXPECT_EQ(invariant_name(Invariant::zero_forcing), "Z");
  EXPECT_EQ(invariant_name(Invariant::domination), "gamma");
  EXPECT_EQ(invariant_name(Invariant::dom_forcing), "F_d");
  EXPECT_EQ(invariant_name(Invariant::propagation_min), "pt_min");
  EXPECT_EQ(invariant_name(Invariant::path_cover), "P");
}

}  // namespace
}  // namespace domforce
