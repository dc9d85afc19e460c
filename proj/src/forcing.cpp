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

#include "domforce/forcing.hpp"

#include <string>

#include "detail/bitmask.hpp"
#include "domforce/errors.hpp"
#include "domforce/solvers.hpp"

namespace domforce {

ForcingTrace forcing_closure(const Graph& g, const VertexSet& initial) {
  if (initial.order() != g.order()) {
    throw GraphError("initial set order does not match graph order");
  }
  ForcingTrace trace;
  trace.initial = initial;
  VertexSet black = initial;
  while (true) {
    ForcingRound round;
    round.index = trace.round_count() + 1;
    round.forced = VertexSet(g.order());
    // Forcers are scanned in increasing id, so a white vertex claimed twice
    // in one round keeps its lowest-id forcer.
    for (Vertex b : black.members()) {
      Vertex target = -1;
      int white = 0;
      for (Vertex w : g.neighbors(b)) {
        if (!black.contains(w)) {
          target = w;
          if (++white > 1) break;
        }
      }
      if (white == 1 && !round.forced.contains(target)) {
        round.forced.insert(target);
        round.forces.push_back({b, target});
      }
    }
    if (round.forces.empty()) break;
    black |= round.forced;
    trace.rounds.push_back(std::move(round));
  }
  trace.final_black = std::move(black);
  return trace;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& b) {
  return forcing_closure(g, b).complete();
}

int propagation_time(const Graph& g, const VertexSet& b) {
  ForcingTrace trace = forcing_closure(g, b);
  if (!trace.complete()) {
    throw NotForcingError("set " + g.format_set(b) +
                          " does not force the graph (stalls at " +
                          std::to_string(trace.final_black.size()) + " of " +
                          std::to_string(g.order()) + " vertices)");
  }
  return trace.round_count();
}

InvariantResult min_propagation_time(const Graph& g, const SolverLimits& limits) {
  limits.require(g.order());
  const InvariantResult z = zero_forcing_number(g, limits);
  const detail::MaskGraph mg(g);

  InvariantResult result;
  result.invariant = Invariant::propagation_min;
  result.value = -1;
  detail::Mask best_set = 0;
  detail::lex_subsets(mg.n, z.value, detail::kNoPrune, [&](detail::Mask s) {
    ++result.explored;
    int rounds = detail::propagation_rounds(mg, s);
    if (rounds >= 0 && (result.value < 0 || rounds < result.value)) {
      result.value = rounds;
      best_set = s;
    }
    return result.value == 0;
  });
  result.witness = VertexSet::from_mask(g.order(), best_set);
  return result;
}

ForcingChains extract_chains(const ForcingTrace& trace) {
  if (!trace.complete()) {
    throw NotForcingError("cannot extract chains from an incomplete trace");
  }
  const int n = trace.final_black.order();
  std::vector<Vertex> next(n, -1);
  for (const ForcingRound& round : trace.rounds) {
    for (const Force& f : round.forces) next[f.forcer] = f.forced;
  }
  ForcingChains out;
  for (Vertex start : trace.initial.members()) {
    std::vector<Vertex> chain{start};
    for (Vertex v = next[start]; v >= 0; v = next[v]) chain.push_back(v);
    out.chains.push_back(std::move(chain));
  }
  return out;
}

}  // namespace domforce
