#pragma once

#include <map>
#include <span>
#include <vector>

#include "turan_lab/graph.hpp"

namespace turan {

using Dart = int;
inline constexpr Dart kNoDart = -1;

/// Per-vertex cyclic neighbor lists (counterclockwise).
using RotationSpec = std::vector<std::vector<Vertex>>;

/// A closed walk traced by the face-successor rule
/// next(d) = rotation successor of twin(d).
struct FaceWalk {
  std::vector<Dart> darts;

  int length() const noexcept { return static_cast<int>(darts.size()); }
};

/// A plane graph as a rotation system of darts.
///
/// Edges are numbered in lexicographic order of their sorted endpoint pairs;
/// edge i owns darts 2i (low -> high) and 2i+1 (high -> low), so twin(d) = d ^ 1.
/// Instances are immutable once built and every instance is genus 0 in each
/// connected component.
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;

  /// Validates symmetry, simplicity and genus; see ErrorCode for rejections.
  static PlanarEmbedding build(const RotationSpec& rotation);

  int vertex_count() const noexcept { return static_cast<int>(rotation_.size()); }
  int edge_count() const noexcept { return static_cast<int>(origin_.size() / 2); }
  int dart_count() const noexcept { return static_cast<int>(origin_.size()); }

  Vertex origin(Dart d) const { return origin_[d]; }
  Vertex head(Dart d) const { return origin_[d ^ 1]; }
  static Dart twin(Dart d) noexcept { return d ^ 1; }
  static int edge_of(Dart d) noexcept { return d / 2; }
  Edge edge(int e) const { return {origin_[2 * e], origin_[2 * e + 1]}; }

  /// Counterclockwise successor / predecessor of d around origin(d).
  Dart next_around(Dart d) const { return next_[d]; }
  Dart prev_around(Dart d) const { return prev_[d]; }
  Dart face_next(Dart d) const { return next_[d ^ 1]; }

  std::span<const Dart> rotation(Vertex v) const { return rotation_[v]; }
  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }

  /// Dart u -> v, or kNoDart when the edge is absent.
  Dart find_dart(Vertex u, Vertex v) const;
  /// Edge index of {u, v}, or -1.
  int find_edge(Vertex u, Vertex v) const;

  const std::vector<FaceWalk>& faces() const noexcept { return faces_; }
  int face_of(Dart d) const { return face_of_[d]; }
  /// Number of faces of the plane graph: traced walks, with the outer walks of
  /// the non-trivial components counted once.
  int face_count() const noexcept { return face_count_; }
  int component_count() const noexcept { return component_count_; }

  Graph graph() const;
  RotationSpec rotation_spec() const;

  friend bool operator==(const PlanarEmbedding& a, const PlanarEmbedding& b) {
    return a.origin_ == b.origin_ && a.rotation_ == b.rotation_;
  }

 private:
  std::vector<Vertex> origin_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<Dart> next_;
  std::vector<Dart> prev_;
  std::vector<FaceWalk> faces_;
  std::vector<int> face_of_;
  int face_count_ = 0;
  int component_count_ = 0;
};

std::vector<FaceWalk> trace_faces(const PlanarEmbedding& emb);

/// Vertex sequence of a face walk (origin of each dart).
std::vector<Vertex> face_vertices(const PlanarEmbedding& emb, const FaceWalk& face);

struct DegreeProfile {
  std::vector<int> degree;
  int min_degree = 0;
  /// degree value -> number of vertices with that degree
  std::map<int, int> census;
};

DegreeProfile degree_profile(const PlanarEmbedding& emb);

/// Face length -> number of face walks of that length.
std::map<int, int> face_census(const PlanarEmbedding& emb);

}  // namespace turan
