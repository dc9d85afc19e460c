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

#ifndef DOMFORCE_SOLVERS_HPP
#define DOMFORCE_SOLVERS_HPP

#include <string_view>
#include <vector>

#include "domforce/graph.hpp"
#include "domforce/invariant.hpp"
#include "domforce/limits.hpp"

namespace domforce {

/// Z(G) with the lexicographically smallest minimum zero forcing set.
InvariantResult zero_forcing_number(const Graph& g,
                                    const SolverLimits& limits = {});

/// F_d(G): the smallest set that is both a dominating set and a zero
/// forcing set of G. The search starts at max(delta(G), #components,
/// ceil(n / (Delta(G) + 1))), lower bounds for Z and gamma, and rejects
/// non-dominating candidates before running the closure.
InvariantResult dom_forcing_number(const Graph& g,
                                   const SolverLimits& limits = {});

/// P(G): minimum number of vertex-disjoint induced paths covering V.
/// Uses limits.max_path_cover_order as its cap.
InvariantResult path_cover_number(const Graph& g,
                                  const SolverLimits& limits = {});

/// True iff every vertex lies in exactly one of `paths` and each entry is an
/// induced path of g listed in path order.
bool is_induced_path_cover(const Graph& g,
                           const std::vector<std::vector<Vertex>>& paths);

enum class BoundSource {
  prop_sandwich,  // max(Z, gamma) <= F_d <= Z + gamma
  prop_refined,   // F_d <= Z + gamma(G - N[S]), S a minimum forcing set
  delta_bound,    // Z <= F_d <= Z + 1 when Delta = n - 1
  split_double,   // F_d(S(G)) <= 2 F_d(G); bounds the splitting graph
};

std::string_view bound_source_name(BoundSource source);

struct BoundReport {
  BoundSource source = BoundSource::prop_sandwich;
  int lower = 0;
  int upper = 0;
};

struct BoundOptions {
  /// Append the split_double report; its interval [1, 2 F_d(G)] applies to
  /// F_d of the splitting graph, not to G.
  bool include_split = false;
};

/// One report per applicable bound, in BoundSource order. prop_refined uses
/// the lexicographically smallest minimum zero forcing set for S, with
/// gamma of an empty remainder taken as 0.
std::vector<BoundReport> fd_bounds(const Graph& g,
                                   const BoundOptions& options = {},
                                   const SolverLimits& limits = {});

/// Plain increasing-cardinality enumeration in lexicographic order, built
/// only on the public set predicates. Supports Z, gamma and F_d. Throws
/// CapExceeded above order 12 and std::invalid_argument for other tags.
InvariantResult naive_oracle(const Graph& g, Invariant invariant);

}  // namespace domforce

#endif  // DOMFORCE_SOLVERS_HPP
