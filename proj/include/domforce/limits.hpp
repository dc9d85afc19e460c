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

#ifndef DOMFORCE_LIMITS_HPP
#define DOMFORCE_LIMITS_HPP

namespace domforce {

inline constexpr int kDefaultMaxOrder = 26;
// Solvers pack vertex subsets into one 64-bit word.
inline constexpr int kHardMaxOrder = 64;
inline constexpr int kDefaultPathCoverMaxOrder = 16;
inline constexpr int kNaiveOracleMaxOrder = 12;

/// Environment variable consulted by SolverLimits::from_environment.
inline constexpr const char* kMaxOrderEnvVar = "DOMFORCE_MAX_ORDER";

/// Order caps guarding the exponential solvers. Constructors and the
/// polynomial operations ignore these.
struct SolverLimits {
  int max_order = kDefaultMaxOrder;
  int max_path_cover_order = kDefaultPathCoverMaxOrder;

  /// Defaults, with max_order overridden by DOMFORCE_MAX_ORDER when set.
  /// Throws std::invalid_argument on a malformed or out-of-range value.
  static SolverLimits from_environment();

  /// Throws CapExceeded when order > max_order.
  void require(int order) const;
  void require_path_cover(int order) const;
};

}  // namespace domforce

#endif  // DOMFORCE_LIMITS_HPP
