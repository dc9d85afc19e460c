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

#ifndef DOMFORCE_TESTS_SUPPORT_ORACLES_HPP
#define DOMFORCE_TESTS_SUPPORT_ORACLES_HPP

// Test-side reference implementations and graph corpora. Nothing here calls
// the library's search code; the oracles only use Graph accessors.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "domforce/graph.hpp"

namespace domforce::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Every connected labeled graph on exactly `order` vertices (order <= 6).
std::vector<Graph> connected_graphs(int order);

/// All connected labeled graphs with 1..max_order vertices.
std::vector<NamedGraph> exhaustive_corpus(int max_order);

/// Connected graph: a random spanning tree plus each other pair with
/// probability `p`.
Graph random_connected_graph(std::mt19937_64& rng, int order, double p);

/// Family instances with order <= max_order, named by their spec string.
std::vector<NamedGraph> family_corpus(int max_order);

/// The 6-cycle v1..v6 with a tail v6-v7-v8, 0-based ids (vi = id i-1).
Graph propagation_example();

/// Property corpus: exhaustive order <= 5, family instances of order <= 16,
/// the propagation example and 40 seeded random graphs of order 4..12.
std::vector<NamedGraph> property_corpus();

/// Closure under the one-force-at-a-time color-change rule.
std::uint64_t async_closure(const Graph& g, std::uint64_t black);

/// Minimum |B| with async_closure(B) = V by plain subset counting.
int brute_zero_forcing(const Graph& g);
/// Minimum |D| with N[D] = V by plain subset counting.
int brute_domination(const Graph& g);
/// Minimum |D| that is both dominating and forcing.
int brute_dom_forcing(const Graph& g);

/// True iff `vs` induces a path in g (any order).
bool induces_path(const Graph& g, const std::vector<Vertex>& vs);

/// Minimum number of blocks in a partition of V into induced paths, by
/// enumerating set partitions. Practical up to order ~10.
int brute_path_cover(const Graph& g);

}  // namespace domforce::testing

#endif  // DOMFORCE_TESTS_SUPPORT_ORACLES_HPP
