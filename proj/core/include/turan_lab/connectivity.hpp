#pragma once

#include <map>
#include <utility>
#include <vector>

#include "turan_lab/graph.hpp"

namespace turan {

/// A maximal 2-connected subgraph, or a bridge (two vertices, one edge).
struct BiconnectedBlock {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted

  int order() const noexcept { return static_cast<int>(vertices.size()); }
  int size() const noexcept { return static_cast<int>(edges.size()); }
};

struct BlockCutDecomposition {
  std::vector<BiconnectedBlock> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
  /// Block-cut tree edges as (block index, cut vertex).
  std::vector<std::pair<int, Vertex>> tree_edges;

  /// Block order -> count, with every order >= 6 folded into key 6.
  std::map<int, int> size_classes() const;
};

BlockCutDecomposition biconnected_blocks(const Graph& g);

struct PeelStep {
  Vertex vertex = 0;           // id in the input graph
  int degree_at_deletion = 0;  // degree in the graph remaining at that moment
};

struct PeelResult {
  Graph subgraph;                // induced on `kept`, relabelled 0..kept.size()-1
  std::vector<Vertex> kept;      // original ids, increasing
  std::vector<PeelStep> trace;   // deletion order
};

/// Repeatedly deletes the lowest-id vertex among those of minimum degree while
/// that degree is below `threshold`.
PeelResult peel_min_degree(const Graph& g, int threshold = 3);

}  // namespace turan
