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

#include "domforce/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domforce/errors.hpp"

namespace domforce {

SolverLimits SolverLimits::from_environment() {
  SolverLimits limits;
  const char* raw = std::getenv(kMaxOrderEnvVar);
  if (raw == nullptr || *raw == '\0') return limits;
  std::string_view text(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 ||
      value > kHardMaxOrder) {
    throw std::invalid_argument(std::string(kMaxOrderEnvVar) +
                                " must be an integer in 1.." +
                                std::to_string(kHardMaxOrder));
  }
  limits.max_order = value;
  return limits;
}

void SolverLimits::require(int order) const {
  int cap = max_order < kHardMaxOrder ? max_order : kHardMaxOrder;
  if (order > cap) throw CapExceeded(order, cap);
}

void SolverLimits::require_path_cover(int order) const {
  int cap = max_path_cover_order < max_order ? max_path_cover_order : max_order;
  if (cap > kHardMaxOrder) cap = kHardMaxOrder;
  if (order > cap) throw CapExceeded(order, cap);
}

}  // namespace domforce
