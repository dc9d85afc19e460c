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

#ifndef DOMFORCE_FORCING_HPP
#define DOMFORCE_FORCING_HPP

#include <vector>

#include "domforce/graph.hpp"
#include "domforce/invariant.hpp"
#include "domforce/limits.hpp"

namespace domforce {

struct Force {
  Vertex forcer;
  Vertex forced;

  friend bool operator==(const Force&, const Force&) = default;
};

struct ForcingRound {
  int index = 0;  // 1-based
  VertexSet forced;
  std::vector<Force> forces;  // ordered by forcer id
};

/// Round-by-round record of the color-change process.
///
/// Each round's forces were all valid against the black set at the start
/// of that round. Rounds are non-empty; a stalled process simply ends with
/// final_black != V.
struct ForcingTrace {
  VertexSet initial;
  std::vector<ForcingRound> rounds;
  VertexSet final_black;

  bool complete() const { return final_black.size() == final_black.order(); }
  int round_count() const { return static_cast<int>(rounds.size()); }
};

/// Forcing chains: chain i starts at the i-th smallest initial vertex and
/// follows force events.
struct ForcingChains {
  std::vector<std::vector<Vertex>> chains;
};

/// Runs the synchronous color-change rule to a fixpoint. When two black
/// vertices could force the same white vertex in one round, the force is
/// attributed to the lower id.
ForcingTrace forcing_closure(const Graph& g, const VertexSet& initial);

bool is_zero_forcing_set(const Graph& g, const VertexSet& b);

/// Rounds until every vertex is black; 0 when b = V. Throws
/// NotForcingError when b is not a zero forcing set.
int propagation_time(const Graph& g, const VertexSet& b);

/// pt(G): minimum propagation time over all minimum zero forcing sets.
/// Throws CapExceeded above limits.max_order.
InvariantResult min_propagation_time(const Graph& g,
                                     const SolverLimits& limits = {});

/// Throws NotForcingError when the trace did not reach every vertex.
ForcingChains extract_chains(const ForcingTrace& trace);

}  // namespace domforce

#endif  // DOMFORCE_FORCING_HPP
