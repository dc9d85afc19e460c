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

#ifndef DOMFORCE_DETAIL_BITMASK_HPP
#define DOMFORCE_DETAIL_BITMASK_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "domforce/graph.hpp"

// Single-word subset machinery shared by the exponential solvers. Vertex i
// is bit i; every graph reaching this point has already passed a cap check
// of at most 64 vertices.
namespace domforce::detail {

using Mask = std::uint64_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }

inline int lowest(Mask m) { return std::countr_zero(m); }

inline bool single_bit(Mask m) { return m != 0 && (m & (m - 1)) == 0; }

struct MaskGraph {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> open;    // N(v)
  std::vector<Mask> closed;  // N[v]

  explicit MaskGraph(const Graph& g) : n(g.order()) {
    all = n == 64 ? ~Mask{0} : bit(n) - 1;
    open.assign(n, 0);
    closed.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) open[v] |= bit(w);
      closed[v] = open[v] | bit(v);
    }
  }
};

inline Mask dominated_by(const MaskGraph& g, Mask s) {
  Mask covered = 0;
  for (; s != 0; s &= s - 1) covered |= g.closed[lowest(s)];
  return covered;
}

/// Final black set of the color-change process started from `black`.
inline Mask closure(const MaskGraph& g, Mask black) {
  while (true) {
    Mask forced = 0;
    for (Mask rest = black; rest != 0; rest &= rest - 1) {
      Mask white = g.open[lowest(rest)] & ~black;
      if (single_bit(white)) forced |= white;
    }
    if (forced == 0) return black;
    black |= forced;
  }
}

/// Synchronous rounds needed to blacken every vertex, or -1 on a stall.
inline int propagation_rounds(const MaskGraph& g, Mask black) {
  int rounds = 0;
  while (black != g.all) {
    Mask forced = 0;
    for (Mask rest = black; rest != 0; rest &= rest - 1) {
      Mask white = g.open[lowest(rest)] & ~black;
      if (single_bit(white)) forced |= white;
    }
    if (forced == 0) return -1;
    black |= forced;
    ++rounds;
  }
  return rounds;
}

namespace internal {

template <class Prune, class Visit>
bool lex_subsets_from(int n, int remaining, int next, Mask chosen, Prune& prune,
                      Visit& visit) {
  if (remaining == 0) return visit(chosen);
  if (prune(chosen, next, remaining)) return false;
  for (int v = next; v <= n - remaining; ++v) {
    if (lex_subsets_from(n, remaining - 1, v + 1, chosen | bit(v), prune, visit)) {
      return true;
    }
  }
  return false;
}

}  // namespace internal

/// Walks the k-subsets of {0..n-1} in lexicographic order of their sorted
/// members. prune(chosen, next, remaining) may cut a partial subset whose
/// completions from ids >= next cannot succeed; visit(subset) returns true
/// to stop. Returns whether a visit stopped the walk.
template <class Prune, class Visit>
bool lex_subsets(int n, int k, Prune prune, Visit visit) {
  if (k < 0 || k > n) return false;
  return internal::lex_subsets_from(n, k, 0, Mask{0}, prune, visit);
}

inline constexpr auto kNoPrune = [](Mask, int, int) { return false; };

/// Cuts partial candidates that can no longer become dominating: some
/// undominated vertex has no closed neighbor among ids >= next, or the picks
/// left cannot cover the undominated count even at maximum degree.
class DominationPrune {
 public:
  explicit DominationPrune(const MaskGraph& g)
      : g_(&g), suffix_reach_(g.n + 1, 0) {
    int max_closed = 0;
    for (int v = g.n - 1; v >= 0; --v) {
      suffix_reach_[v] = suffix_reach_[v + 1] | g.closed[v];
      max_closed = std::max(max_closed, std::popcount(g.closed[v]));
    }
    max_cover_ = max_closed;
  }

  bool operator()(Mask chosen, int next, int remaining) const {
    Mask undominated = g_->all & ~dominated_by(*g_, chosen);
    if (undominated == 0) return false;
    if ((undominated & ~suffix_reach_[next]) != 0) return true;
    return std::popcount(undominated) > remaining * max_cover_;
  }

 private:
  const MaskGraph* g_;
  std::vector<Mask> suffix_reach_;
  int max_cover_ = 1;
};

}  // namespace domforce::detail

#endif  // DOMFORCE_DETAIL_BITMASK_HPP
