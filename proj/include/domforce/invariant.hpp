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

#ifndef DOMFORCE_INVARIANT_HPP
#define DOMFORCE_INVARIANT_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "domforce/vertex_set.hpp"

namespace domforce {

enum class Invariant {
  zero_forcing,     // Z(G)
  domination,       // gamma(G)
  dom_forcing,      // F_d(G)
  propagation_min,  // pt(G)
  path_cover,       // P(G)
};

std::string_view invariant_name(Invariant inv);

/// Value of an invariant together with a certificate.
///
/// For Z, gamma and F_d the witness is the lexicographically smallest set
/// of minimum size. For pt it is the lexicographically smallest minimum
/// zero forcing set attaining the minimum propagation time. For P the
/// witness is the union of `paths`, each listed in path order.
struct InvariantResult {
  Invariant invariant = Invariant::zero_forcing;
  int value = 0;
  VertexSet witness;
  std::vector<std::vector<Vertex>> paths;
  std::uint64_t explored = 0;
};

}  // namespace domforce

#endif  // DOMFORCE_INVARIANT_HPP
