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

#include "domforce/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "domforce/errors.hpp"

namespace domforce {
namespace {

constexpr int kWordBits = 64;

int word_count(int order) { return (order + kWordBits - 1) / kWordBits; }

}  // namespace

VertexSet::VertexSet(int order) : order_(order) {
  if (order < 0) throw GraphError("negative vertex set order");
  words_.assign(word_count(order), 0);
}

VertexSet::VertexSet(int order, std::initializer_list<Vertex> members)
    : VertexSet(order) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::of(int order, std::span<const Vertex> members) {
  VertexSet s(order);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int order) {
  VertexSet s(order);
  for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) {
    int bits = std::min(kWordBits, order - w * kWordBits);
    s.words_[w] = bits == kWordBits ? ~0ULL : (1ULL << bits) - 1;
  }
  return s;
}

VertexSet VertexSet::from_mask(int order, std::uint64_t mask) {
  if (order > kWordBits) throw GraphError("mask sets support order <= 64");
  VertexSet s(order);
  if (order < kWordBits && (mask >> order) != 0) {
    throw GraphError("mask has bits beyond order " + std::to_string(order));
  }
  if (order > 0) s.words_[0] = mask;
  return s;
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::contains(Vertex v) const noexcept {
  if (v < 0 || v >= order_) return false;
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1ULL;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= order_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order_));
  }
  words_[v / kWordBits] |= 1ULL << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= order_) return;
  words_[v / kWordBits] &= ~(1ULL << (v % kWordBits));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (int w = 0; w < static_cast<int>(words_.size()); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (order_ > kWordBits) throw GraphError("mask sets support order <= 64");
  return words_.empty() ? 0 : words_[0];
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

void VertexSet::check_same_order(const VertexSet& other) const {
  if (order_ != other.order_) {
    throw GraphError("vertex sets of different orders " +
                     std::to_string(order_) + " and " +
                     std::to_string(other.order_));
  }
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto am = a.members();
  auto bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(),
                                      bm.end());
}

}  // namespace domforce
