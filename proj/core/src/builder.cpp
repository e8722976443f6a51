#include "builder.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "turan_lab/error.hpp"

namespace turan::detail {

Vertex RotationBuilder::add_vertex(std::vector<Vertex> rotation) {
  rot_.push_back(std::move(rotation));
  return static_cast<Vertex>(rot_.size() - 1);
}

std::size_t RotationBuilder::position(Vertex v, Vertex of) const {
  const auto& r = rot_[v];
  auto it = std::find(r.begin(), r.end(), of);
  if (it == r.end()) {
    throw Error(ErrorCode::kInvalidVertex,
                "builder: " + std::to_string(of) + " is not a neighbor of " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - r.begin());
}

Vertex RotationBuilder::succ(Vertex v, Vertex of) const {
  const auto& r = rot_[v];
  return r[(position(v, of) + 1) % r.size()];
}

Vertex RotationBuilder::pred(Vertex v, Vertex of) const {
  const auto& r = rot_[v];
  return r[(position(v, of) + r.size() - 1) % r.size()];
}

void RotationBuilder::insert_after(Vertex v, Vertex after, Vertex w) {
  auto& r = rot_[v];
  r.insert(r.begin() + static_cast<std::ptrdiff_t>(position(v, after)) + 1, w);
}

void RotationBuilder::insert_before(Vertex v, Vertex before, Vertex w) {
  auto& r = rot_[v];
  r.insert(r.begin() + static_cast<std::ptrdiff_t>(position(v, before)), w);
}

void RotationBuilder::replace_neighbor(Vertex v, Vertex from, Vertex to) { rot_[v][position(v, from)] = to; }

Vertex RotationBuilder::subdivide(Vertex a, Vertex b) {
  Vertex h = add_vertex({a, b});
  replace_neighbor(a, b, h);
  replace_neighbor(b, a, h);
  return h;
}

void RotationBuilder::cut_corner(Vertex v, Vertex x, Vertex y) {
  insert_after(y, v, x);
  insert_before(x, v, y);
}

Vertex RotationBuilder::add_vertex_in_face(const std::vector<Vertex>& face) {
  const std::size_t k = face.size();
  Vertex w = add_vertex(std::vector<Vertex>(face.rbegin(), face.rend()));
  for (std::size_t i = 0; i < k; ++i) {
    insert_after(face[i], face[(i + k - 1) % k], w);
  }
  return w;
}

std::vector<Vertex> RotationBuilder::add_ear(Vertex a, Vertex before_a, Vertex b, Vertex before_b,
                                             int inner_vertices) {
  std::vector<Vertex> path;
  path.reserve(static_cast<std::size_t>(inner_vertices));
  for (int i = 0; i < inner_vertices; ++i) path.push_back(add_vertex());
  for (int i = 0; i < inner_vertices; ++i) {
    Vertex prev = i == 0 ? a : path[i - 1];
    Vertex next = i + 1 == inner_vertices ? b : path[i + 1];
    rot_[path[i]] = {prev, next};
  }
  insert_after(a, before_a, inner_vertices > 0 ? path.front() : b);
  insert_after(b, before_b, inner_vertices > 0 ? path.back() : a);
  return path;
}

std::vector<Vertex> RotationBuilder::bfs_distances(Vertex from) const {
  std::vector<Vertex> dist(rot_.size(), -1);
  std::deque<Vertex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : rot_[x]) {
      if (dist[y] == -1) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace turan::detail
