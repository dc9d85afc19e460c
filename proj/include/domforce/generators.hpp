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

#ifndef DOMFORCE_GENERATORS_HPP
#define DOMFORCE_GENERATORS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "domforce/graph.hpp"
#include "domforce/limits.hpp"

namespace domforce {

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  wheel,
  ladder,
  hypercube,
  coconut_tree,
  diamond_snake,
  triangular_snake,
  helm,
  pineapple,
  dove_tail,
  petersen,
};

/// A named graph family plus its integer parameters.
///
/// Vertex numbering and display labels per family (ids are 0-based, labels
/// 1-based):
///   path(n), cycle(n), complete(n)  v1..vn                    ids 0..n-1
///   complete_bipartite(m,n)         u1..um | v1..vn
///   star(n)                         u1 (center, id 0) | v1..vn
///   wheel(n)                        v0 (hub, id 0) | rim v1..v(n-1)
///   ladder(n)                       u1..un | v1..vn, rungs u_i v_i
///   hypercube(k)                    id = coordinate bits, MSB first;
///                                   label is the k-bit string
///   coconut_tree(m,n)               path v1..vm | pendants u1..un at v1
///   diamond_snake(n)                u1..un | spine v1..v(n+1) | w1..wn
///   triangular_snake(n)             spine v1..v(n+1) | apexes u1..un
///   helm(m)                         v0 (hub) | rim v1..vm | pendants u1..um
///   pineapple(m,n)                  clique v1..vm | pendants u1..un at v1
///   dove_tail(n)                    v0 (apex) | path v1..vn
///   petersen                        outer u1..u5 | inner v1..v5
struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// A family instance with zero or more applications of the splitting
/// operator, i.e. the CLI grammar "split(split(path:4))".
struct GraphSpec {
  FamilySpec base;
  int split_depth = 0;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// Throws GraphError when the parameters are outside the family's range.
Graph generate(const FamilySpec& spec);

/// S(G): adds a shadow i+n for each vertex i, adjacent to exactly N(i).
/// Shadow labels append a prime to the original label. Throws CapExceeded
/// when 2n exceeds limits.max_order.
Graph splitting(const Graph& g, const SolverLimits& limits = {});

/// Generates the base family and applies splitting split_depth times.
Graph build(const GraphSpec& spec, const SolverLimits& limits = {});

/// Display label of vertex `v` under the family's documented convention.
std::string family_display_label(const FamilySpec& spec, Vertex v);

std::string_view family_name(Family family);
int family_arity(Family family);

/// Parses "path:7", "coconut:4,3", "petersen", "split(<spec>)".
/// Throws ParseError on malformed input and GraphError on bad parameters.
GraphSpec parse_graph_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
std::string to_string(const GraphSpec& spec);

}  // namespace domforce

#endif  // DOMFORCE_GENERATORS_HPP
