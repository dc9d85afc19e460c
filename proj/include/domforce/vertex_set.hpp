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

#ifndef DOMFORCE_VERTEX_SET_HPP
#define DOMFORCE_VERTEX_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace domforce {

using Vertex = int;

/// A subset of {0, ..., order-1}. Forcing sets, dominating sets and
/// witnesses are all carried as VertexSets tied to the order of the graph
/// they were computed on.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int order);
  VertexSet(int order, std::initializer_list<Vertex> members);

  static VertexSet of(int order, std::span<const Vertex> members);
  static VertexSet full(int order);
  /// Bit i of `mask` is vertex i. Requires order <= 64.
  static VertexSet from_mask(int order, std::uint64_t mask);

  int order() const noexcept { return order_; }
  int size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept;
  void insert(Vertex v);
  void erase(Vertex v);

  /// Members in increasing id order.
  std::vector<Vertex> members() const;
  /// Requires order <= 64.
  std::uint64_t to_mask() const;

  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check_same_order(const VertexSet& other) const;

  int order_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the sorted member sequences; the tie-break rule
/// for every witness the solvers return.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace domforce

#endif  // DOMFORCE_VERTEX_SET_HPP
