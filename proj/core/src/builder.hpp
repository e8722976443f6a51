#pragma once

#include <vector>

#include "turan_lab/embedding.hpp"

namespace turan::detail {

/// Mutable rotation system used by the constructions. All insertions keep the
/// system plane; `finish()` re-validates through PlanarEmbedding::build.
///
/// Face convention matches PlanarEmbedding: the walk u -> v continues to
/// v -> succ_v(u).
class RotationBuilder {
 public:
  RotationBuilder() = default;
  explicit RotationBuilder(RotationSpec rotation) : rot_(std::move(rotation)) {}

  int vertex_count() const noexcept { return static_cast<int>(rot_.size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }

  Vertex add_vertex(std::vector<Vertex> rotation = {});

  /// Neighbor following / preceding `of` in the rotation at v.
  Vertex succ(Vertex v, Vertex of) const;
  Vertex pred(Vertex v, Vertex of) const;

  /// Places w immediately after `after` in the rotation at v.
  void insert_after(Vertex v, Vertex after, Vertex w);
  void insert_before(Vertex v, Vertex before, Vertex w);
  void replace_neighbor(Vertex v, Vertex from, Vertex to);

  /// Replaces edge {a, b} by the path a - h - b and returns h.
  Vertex subdivide(Vertex a, Vertex b);

  /// Adds edge {x, y} across the corner x -> v -> y of a face (y = succ_v(x)),
  /// creating the triangular face x -> v -> y -> x.
  void cut_corner(Vertex v, Vertex x, Vertex y);

  /// Adds a vertex inside the face whose walk visits `face` in order, joined to
  /// every listed vertex.
  Vertex add_vertex_in_face(const std::vector<Vertex>& face);

  /// Adds the path a - n1 - ... - np - b inside the face that contains the
  /// walks before_a -> a and before_b -> b. `before_a` / `before_b` are the
  /// predecessors of a / b along that face.
  std::vector<Vertex> add_ear(Vertex a, Vertex before_a, Vertex b, Vertex before_b, int inner_vertices);

  std::vector<Vertex> bfs_distances(Vertex from) const;

  const RotationSpec& spec() const noexcept { return rot_; }
  PlanarEmbedding finish() const { return PlanarEmbedding::build(rot_); }

 private:
  std::size_t position(Vertex v, Vertex of) const;

  RotationSpec rot_;
};

}  // namespace turan::detail
