#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace turan {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..order()-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  /// Throws Error(kMultiEdgeOrLoop) on loops or repeated edges and
  /// Error(kInvalidVertex) on out-of-range endpoints.
  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  /// Returns false (and leaves the graph unchanged) if the edge already exists.
  bool add_edge(Vertex a, Vertex b);
  bool remove_edge(Vertex a, Vertex b);

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Lexicographically sorted edge list.
  std::vector<Edge> edges() const;

  int min_degree() const;

  /// Subgraph induced by `keep`; vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Component id per vertex (ids dense, in order of smallest vertex).
std::vector<int> connected_components(const Graph& g, int* component_count = nullptr);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
/// At least three vertices, connected, and no cut vertex.
bool is_two_connected(const Graph& g);

}  // namespace turan
