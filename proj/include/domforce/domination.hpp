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

#ifndef DOMFORCE_DOMINATION_HPP
#define DOMFORCE_DOMINATION_HPP

#include "domforce/graph.hpp"
#include "domforce/invariant.hpp"
#include "domforce/limits.hpp"

namespace domforce {

/// True iff N[d] = V.
bool is_dominating_set(const Graph& g, const VertexSet& d);

/// gamma(G) with the lexicographically smallest minimum dominating set.
///
/// Increasing-cardinality search bounded above by a greedy dominating set;
/// a partial candidate is cut as soon as some undominated vertex has no
/// closed neighbor left among the ids still available.
InvariantResult domination_number(const Graph& g,
                                  const SolverLimits& limits = {});

}  // namespace domforce

#endif  // DOMFORCE_DOMINATION_HPP
