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

#ifndef DOMFORCE_GRAPH_HPP
#define DOMFORCE_GRAPH_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "domforce/vertex_set.hpp"

namespace domforce {

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Adjacency is stored as sorted neighbor lists; it is symmetric, loop-free
/// and free of parallel edges by construction. An optional label table maps
/// ids to display names such as "u3" or "v'2" for reporting witnesses in
/// the notation of the family that produced the graph.
class Graph {
 public:
  /// Throws GraphError on order < 1, an id out of range, or a self-loop.
  /// Duplicate pairs (in either orientation) collapse to one edge.
  Graph(int order, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const noexcept;
  int min_degree() const noexcept;

  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Display label of v; the decimal id when no label table is present.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  /// Renders a set as "{u1,u2,v3}" using display labels.
  std::string format_set(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  int edge_count_ = 0;
};

Graph build_graph(int order, std::span<const Edge> edges);
inline Graph build_graph(int order, std::initializer_list<Edge> edges) {
  return build_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

/// N[S] = S together with every neighbor of a member of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// Induced subgraph on V \ s, relabeled densely in increasing id order. The
/// kept vertices carry their display labels from g. Throws GraphError when
/// s = V.
Graph delete_vertices(const Graph& g, const VertexSet& s);

/// Induced subgraph on s with the same dense relabeling as delete_vertices.
/// Throws GraphError when s is empty.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

int degree(const Graph& g, Vertex v);
int max_degree(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

}  // namespace domforce

#endif  // DOMFORCE_GRAPH_HPP
