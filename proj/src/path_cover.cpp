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

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "detail/bitmask.hpp"
#include "domforce/solvers.hpp"

namespace domforce {
namespace {

using detail::bit;
using detail::lowest;
using detail::Mask;

// Exact P(G) by memoized branching: the lowest uncovered vertex must lie on
// some induced path inside the uncovered set, so try each such path and
// recurse on what is left.
class PathCoverSearch {
 public:
  explicit PathCoverSearch(const Graph& g) : g_(g) {}

  int solve(Mask remaining) {
    if (remaining == 0) return 0;
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second.count;
    ++explored_;
    Best best{std::numeric_limits<int>::max(), 0};
    for (Mask path : induced_paths_through(lowest(remaining), remaining)) {
      int count = 1 + solve(remaining & ~path);
      if (count < best.count) best = {count, path};
      if (best.count == 1) break;
    }
    memo_.emplace(remaining, best);
    return best.count;
  }

  std::vector<Mask> chosen_paths(Mask remaining) const {
    std::vector<Mask> out;
    while (remaining != 0) {
      Mask path = memo_.at(remaining).path;
      out.push_back(path);
      remaining &= ~path;
    }
    return out;
  }

  std::uint64_t explored() const { return explored_; }

 private:
  struct Best {
    int count;
    Mask path;
  };

  // Vertices that extend the induced path `path` at `end`.
  Mask extensions(Mask path, int end, Mask remaining) const {
    Mask out = 0;
    for (Mask cand = g_.open[end] & remaining & ~path; cand != 0; cand &= cand - 1) {
      int w = lowest(cand);
      if ((g_.open[w] & path) == bit(end)) out |= bit(w);
    }
    return out;
  }

  // Grows at the back first, then only at the front, so every path through
  // v is reached with v splitting it into a back ray and a front ray.
  void grow(Mask path, int front, int back, bool back_phase, Mask remaining,
            std::unordered_set<Mask>& found) const {
    found.insert(path);
    if (back_phase) {
      for (Mask ext = extensions(path, back, remaining); ext != 0; ext &= ext - 1) {
        int w = lowest(ext);
        grow(path | bit(w), front, w, true, remaining, found);
      }
    }
    for (Mask ext = extensions(path, front, remaining); ext != 0; ext &= ext - 1) {
      int w = lowest(ext);
      grow(path | bit(w), w, back, false, remaining, found);
    }
  }

  std::vector<Mask> induced_paths_through(int v, Mask remaining) const {
    std::unordered_set<Mask> found;
    grow(bit(v), v, v, true, remaining, found);
    std::vector<Mask> out(found.begin(), found.end());
    // Longer paths first tends to reach a cover of size 1 or 2 early.
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a < b;
    });
    return out;
  }

  detail::MaskGraph g_;
  std::unordered_map<Mask, Best> memo_;
  std::uint64_t explored_ = 0;
};

std::vector<Vertex> order_path(const Graph& g, Mask path) {
  std::vector<Vertex> members;
  for (Mask m = path; m != 0; m &= m - 1) members.push_back(lowest(m));
  auto inside = [&](Vertex v) { return (path >> v) & 1ULL; };
  auto internal_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += inside(w) ? 1 : 0;
    return d;
  };
  Vertex start = members.front();
  for (Vertex v : members) {
    if (internal_degree(v) <= 1) {
      start = v;
      break;
    }
  }
  std::vector<Vertex> out{start};
  Vertex prev = -1;
  Vertex cur = start;
  while (static_cast<int>(out.size()) < static_cast<int>(members.size())) {
    for (Vertex w : g.neighbors(cur)) {
      if (inside(w) && w != prev) {
        prev = cur;
        cur = w;
        out.push_back(cur);
        break;
      }
    }
  }
  return out;
}

}  // namespace

InvariantResult path_cover_number(const Graph& g, const SolverLimits& limits) {
  limits.require_path_cover(g.order());
  PathCoverSearch search(g);
  const Mask all = detail::MaskGraph(g).all;
  InvariantResult result;
  result.invariant = Invariant::path_cover;
  result.value = search.solve(all);
  result.explored = search.explored();
  result.witness = VertexSet::full(g.order());
  for (Mask path : search.chosen_paths(all)) {
    result.paths.push_back(order_path(g, path));
  }
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

bool is_induced_path_cover(const Graph& g,
                           const std::vector<std::vector<Vertex>>& paths) {
  std::vector<int> owner(g.order(), -1);
  for (std::size_t p = 0; p < paths.size(); ++p) {
    if (paths[p].empty()) return false;
    for (Vertex v : paths[p]) {
      if (v < 0 || v >= g.order() || owner[v] != -1) return false;
      owner[v] = static_cast<int>(p);
    }
  }
  if (std::count(owner.begin(), owner.end(), -1) != 0) return false;
  for (const auto& path : paths) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      for (std::size_t j = i + 1; j < path.size(); ++j) {
        if (g.adjacent(path[i], path[j]) != (j == i + 1)) return false;
      }
    }
  }
  return true;
}

}  // namespace domforce
