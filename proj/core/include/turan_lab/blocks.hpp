#pragma once

#include <string_view>
#include <vector>

#include "turan_lab/embedding.hpp"

namespace turan {

enum class BlockType { kB2, kB3, kB4a, kB4b, kB5a, kB5b, kB5c, kB5d, kOversized };

std::string_view to_string(BlockType type) noexcept;

/// An exterior edge together with the non-triangular faces it bounds (one face
/// for edges of nontrivial blocks, two for a trivial block in a 2-connected host).
struct ExteriorEdge {
  Edge edge;
  std::vector<int> faces;  // face ids into emb.faces(), increasing
};

struct ExteriorStructure {
  std::vector<ExteriorEdge> exterior_edges;  // sorted by edge
  std::vector<Edge> interior_edges;          // sorted
  /// Maximal runs of exterior edges whose inner vertices are non-junction
  /// vertices of exterior degree 2. A run with no junction at all is reported
  /// as a closed sequence starting at its smallest vertex.
  std::vector<std::vector<Vertex>> exterior_paths;
};

struct TriangularBlock {
  std::vector<Edge> edges;       // sorted
  std::vector<Vertex> vertices;  // sorted, host ids
  BlockType type = BlockType::kB2;
  ExteriorStructure exterior;

  int order() const noexcept { return static_cast<int>(vertices.size()); }
  int size() const noexcept { return static_cast<int>(edges.size()); }
  bool trivial() const noexcept { return edges.size() == 1; }
  bool contains(Vertex v) const;
  bool contains(Edge e) const;
};

/// Number of triangular blocks containing each vertex.
struct JunctionMap {
  std::vector<int> count;

  bool is_junction(Vertex v) const { return count[v] >= 2; }
};

/// Union of the edge sets of 3-faces, closed transitively; edges on no 3-face
/// become trivial blocks. Blocks are ordered by their smallest edge and come
/// back fully populated (type and exterior structure).
std::vector<TriangularBlock> decompose_triangular_blocks(const PlanarEmbedding& emb);

/// The block B(e) grown literally from one edge: keep adding the other edges
/// of every 3-face that contains an edge already collected. Sorted edges.
std::vector<Edge> closure_block(const PlanarEmbedding& emb, Edge seed);

/// Throws Error(kUnclassifiableBlock) for a 2..5 vertex block outside the
/// eight known shapes.
BlockType classify_block(const TriangularBlock& block, const PlanarEmbedding& emb);

JunctionMap junction_map(const std::vector<TriangularBlock>& blocks, int vertex_count);

ExteriorStructure exterior_structure(const TriangularBlock& block, const PlanarEmbedding& emb,
                                     const JunctionMap& junctions);

/// Degree of v counting only edges of the block.
int degree_in_block(const TriangularBlock& block, Vertex v);

/// Index of the block owning each edge of emb (indexed by edge id).
std::vector<int> edge_owner(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks);

}  // namespace turan
