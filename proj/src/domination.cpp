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

#include "domforce/domination.hpp"

#include <bit>

#include "detail/bitmask.hpp"
#include "domforce/errors.hpp"

namespace domforce {

bool is_dominating_set(const Graph& g, const VertexSet& d) {
  return closed_neighborhood(g, d).size() == g.order();
}

namespace {

int greedy_dominating_size(const detail::MaskGraph& g) {
  detail::Mask covered = 0;
  int picks = 0;
  while (covered != g.all) {
    int best = 0;
    int best_gain = -1;
    for (int v = 0; v < g.n; ++v) {
      int gain = std::popcount(g.closed[v] & ~covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    covered |= g.closed[best];
    ++picks;
  }
  return picks;
}

}  // namespace

InvariantResult domination_number(const Graph& g, const SolverLimits& limits) {
  limits.require(g.order());
  const detail::MaskGraph mg(g);
  const int upper = greedy_dominating_size(mg);
  const int lower = std::max((mg.n + g.max_degree()) / (g.max_degree() + 1),
                             component_count(g));

  InvariantResult result;
  result.invariant = Invariant::domination;
  const detail::DominationPrune prune(mg);
  for (int k = lower; k <= upper; ++k) {
    detail::Mask found = 0;
    bool hit = detail::lex_subsets(mg.n, k, prune, [&](detail::Mask s) {
      ++result.explored;
      if (detail::dominated_by(mg, s) != mg.all) return false;
      found = s;
      return true;
    });
    if (hit) {
      result.value = k;
      result.witness = VertexSet::from_mask(mg.n, found);
      return result;
    }
  }
  // The greedy set has `upper` members, so the loop always returns.
  throw std::logic_error("domination search exhausted its greedy bound");
}

}  // namespace domforce
