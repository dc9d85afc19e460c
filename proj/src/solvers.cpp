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

#include "domforce/solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "detail/bitmask.hpp"
#include "domforce/domination.hpp"
#include "domforce/errors.hpp"
#include "domforce/forcing.hpp"

namespace domforce {

std::string_view invariant_name(Invariant inv) {
  switch (inv) {
    case Invariant::zero_forcing: return "Z";
    case Invariant::domination: return "gamma";
    case Invariant::dom_forcing: return "F_d";
    case Invariant::propagation_min: return "pt_min";
    case Invariant::path_cover: return "P";
  }
  return "?";
}

std::string_view bound_source_name(BoundSource source) {
  switch (source) {
    case BoundSource::prop_sandwich: return "prop_sandwich";
    case BoundSource::prop_refined: return "prop_refined";
    case BoundSource::delta_bound: return "delta_bound";
    case BoundSource::split_double: return "split_double";
  }
  return "?";
}

namespace {

// Z(G) >= delta(G), and every component needs a black vertex.
int zero_forcing_lower_bound(const Graph& g) {
  return std::max({1, g.min_degree(), component_count(g)});
}

int domination_lower_bound(const Graph& g) {
  const int reach = g.max_degree() + 1;
  return std::max((g.order() + reach - 1) / reach, component_count(g));
}

}  // namespace

InvariantResult zero_forcing_number(const Graph& g, const SolverLimits& limits) {
  limits.require(g.order());
  const detail::MaskGraph mg(g);
  InvariantResult result;
  result.invariant = Invariant::zero_forcing;
  for (int k = zero_forcing_lower_bound(g); k <= mg.n; ++k) {
    detail::Mask found = 0;
    bool hit = detail::lex_subsets(mg.n, k, detail::kNoPrune, [&](detail::Mask s) {
      ++result.explored;
      if (detail::closure(mg, s) != mg.all) return false;
      found = s;
      return true;
    });
    if (hit) {
      result.value = k;
      result.witness = VertexSet::from_mask(mg.n, found);
      return result;
    }
  }
  throw std::logic_error("zero forcing search found no set, not even V");
}

InvariantResult dom_forcing_number(const Graph& g, const SolverLimits& limits) {
  limits.require(g.order());
  const detail::MaskGraph mg(g);
  const detail::DominationPrune prune(mg);
  InvariantResult result;
  result.invariant = Invariant::dom_forcing;
  const int start = std::max(zero_forcing_lower_bound(g), domination_lower_bound(g));
  for (int k = start; k <= mg.n; ++k) {
    detail::Mask found = 0;
    bool hit = detail::lex_subsets(mg.n, k, prune, [&](detail::Mask s) {
      ++result.explored;
      if (detail::dominated_by(mg, s) != mg.all) return false;
      if (detail::closure(mg, s) != mg.all) return false;
      found = s;
      return true;
    });
    if (hit) {
      result.value = k;
      result.witness = VertexSet::from_mask(mg.n, found);
      return result;
    }
  }
  throw std::logic_error("dom-forcing search found no set, not even V");
}

std::vector<BoundReport> fd_bounds(const Graph& g, const BoundOptions& options,
                                   const SolverLimits& limits) {
  const InvariantResult z = zero_forcing_number(g, limits);
  const InvariantResult gamma = domination_number(g, limits);
  const int lower = std::max(z.value, gamma.value);

  std::vector<BoundReport> out;
  out.push_back({BoundSource::prop_sandwich, lower, z.value + gamma.value});

  const VertexSet covered = closed_neighborhood(g, z.witness);
  int gamma_rest = 0;
  if (covered.size() < g.order()) {
    gamma_rest = domination_number(delete_vertices(g, covered), limits).value;
  }
  out.push_back({BoundSource::prop_refined, lower, z.value + gamma_rest});

  if (g.max_degree() == g.order() - 1) {
    out.push_back({BoundSource::delta_bound, z.value, z.value + 1});
  }
  if (options.include_split) {
    out.push_back({BoundSource::split_double, 1,
                   2 * dom_forcing_number(g, limits).value});
  }
  return out;
}

namespace {

// Advances `idx` (strictly increasing, values < n) to the next combination
// in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<Vertex>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

InvariantResult naive_oracle(const Graph& g, Invariant invariant) {
  if (g.order() > kNaiveOracleMaxOrder) {
    throw CapExceeded(g.order(), kNaiveOracleMaxOrder);
  }
  auto accepts = [&](const VertexSet& s) {
    switch (invariant) {
      case Invariant::zero_forcing: return is_zero_forcing_set(g, s);
      case Invariant::domination: return is_dominating_set(g, s);
      case Invariant::dom_forcing:
        return is_dominating_set(g, s) && is_zero_forcing_set(g, s);
      default:
        throw std::invalid_argument("naive oracle supports Z, gamma and F_d only, not " +
                                    std::string(invariant_name(invariant)));
    }
  };
  InvariantResult result;
  result.invariant = invariant;
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    std::vector<Vertex> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
      ++result.explored;
      VertexSet s = VertexSet::of(n, idx);
      if (accepts(s)) {
        result.value = k;
        result.witness = std::move(s);
        return result;
      }
    } while (next_combination(idx, n));
  }
  throw std::logic_error("naive oracle found no set, not even V");
}

}  // namespace domforce
