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

#include "domforce/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "domforce/errors.hpp"

namespace domforce {

Graph::Graph(int order, std::span<const Edge> edges,
             std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (order < 1) throw GraphError("graph order must be at least 1");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != order) {
    throw GraphError("label table size does not match graph order");
  }
  adjacency_.resize(order);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order) {
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") out of range for order " +
                       std::to_string(order));
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += static_cast<int>(nbrs.size());
  }
  edge_count_ /= 2;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return static_cast<int>(best);
}

int Graph::min_degree() const noexcept {
  std::size_t best = adjacency_.front().size();
  for (const auto& nbrs : adjacency_) best = std::min(best, nbrs.size());
  return static_cast<int>(best);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  Graph copy = *this;
  if (!labels.empty() && static_cast<int>(labels.size()) != order()) {
    throw GraphError("label table size does not match graph order");
  }
  copy.labels_ = std::move(labels);
  return copy;
}

std::string Graph::format_set(const VertexSet& s) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.members()) {
    if (!first) out += ',';
    out += label(v);
    first = false;
  }
  out += '}';
  return out;
}

Graph build_graph(int order, std::span<const Edge> edges) {
  return Graph(order, edges);
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  if (s.order() != g.order()) throw GraphError("vertex set order mismatch");
  VertexSet out = s;
  for (Vertex v : s.members()) {
    for (Vertex w : g.neighbors(v)) out.insert(w);
  }
  return out;
}

namespace {

Graph induced_on(const Graph& g, const std::vector<Vertex>& kept) {
  std::vector<Vertex> new_id(g.order(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) new_id[kept[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (Vertex v : kept) {
    labels.push_back(g.label(v));
    for (Vertex w : g.neighbors(v)) {
      if (v < w && new_id[w] >= 0) edges.push_back({new_id[v], new_id[w]});
    }
  }
  return Graph(static_cast<int>(kept.size()), edges, std::move(labels));
}

}  // namespace

Graph delete_vertices(const Graph& g, const VertexSet& s) {
  if (s.order() != g.order()) throw GraphError("vertex set order mismatch");
  VertexSet rest = VertexSet::full(g.order()) - s;
  if (rest.empty()) throw GraphError("deleting every vertex leaves an empty graph");
  return induced_on(g, rest.members());
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.order() != g.order()) throw GraphError("vertex set order mismatch");
  if (s.empty()) throw GraphError("induced subgraph on an empty set");
  return induced_on(g, s.members());
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

int max_degree(const Graph& g) { return g.max_degree(); }

int component_count(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  int components = 0;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    ++components;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

}  // namespace domforce
