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

#ifndef DOMFORCE_ERRORS_HPP
#define DOMFORCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace domforce {

/// Invalid graph construction or operator argument (bad id, self-loop,
/// empty result).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed edge list or family spec string.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential solver was handed a graph above its order cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int order, int cap)
      : std::runtime_error("graph order " + std::to_string(order) +
                           " exceeds solver cap " + std::to_string(cap)),
        order_(order),
        cap_(cap) {}

  int order() const noexcept { return order_; }
  int cap() const noexcept { return cap_; }

 private:
  int order_;
  int cap_;
};

/// Propagation time was requested for a set that does not force the graph.
class NotForcingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace domforce

#endif  // DOMFORCE_ERRORS_HPP
