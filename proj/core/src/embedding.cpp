#include "turan_lab/embedding.hpp"

#include <algorithm>
#include <string>

#include "turan_lab/error.hpp"

namespace turan {

namespace {

std::string pair_str(Vertex a, Vertex b) { return std::to_string(a) + "-" + std::to_string(b); }

}  // namespace

PlanarEmbedding PlanarEmbedding::build(const RotationSpec& rotation) {
  const int n = static_cast<int>(rotation.size());

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    std::vector<Vertex> seen = rotation[u];
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) {
      Vertex v = seen[i];
      if (v < 0 || v >= n) throw Error(ErrorCode::kInvalidVertex, "neighbor " + std::to_string(v));
      if (v == u) throw Error(ErrorCode::kMultiEdgeOrLoop, "loop at " + std::to_string(u));
      if (i > 0 && seen[i - 1] == v) throw Error(ErrorCode::kMultiEdgeOrLoop, "repeated edge " + pair_str(u, v));
      const auto& back = rotation[v];
      if (std::find(back.begin(), back.end(), u) == back.end()) {
        throw Error(ErrorCode::kAsymmetricAdjacency, pair_str(u, v) + " listed only at " + std::to_string(u));
      }
      if (u < v) edges.push_back({u, v});
    }
  }
  std::sort(edges.begin(), edges.end());

  PlanarEmbedding emb;
  const int m = static_cast<int>(edges.size());
  emb.origin_.resize(2 * static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    emb.origin_[2 * e] = edges[e].u;
    emb.origin_[2 * e + 1] = edges[e].v;
  }

  emb.rotation_.assign(static_cast<std::size_t>(n), {});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : rotation[u]) {
      Edge key = make_edge(u, v);
      int e = static_cast<int>(std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
      emb.rotation_[u].push_back(u == key.u ? 2 * e : 2 * e + 1);
    }
  }

  emb.next_.assign(emb.origin_.size(), kNoDart);
  emb.prev_.assign(emb.origin_.size(), kNoDart);
  for (Vertex u = 0; u < n; ++u) {
    const auto& rot = emb.rotation_[u];
    const std::size_t k = rot.size();
    for (std::size_t i = 0; i < k; ++i) {
      emb.next_[rot[i]] = rot[(i + 1) % k];
      emb.prev_[rot[i]] = rot[(i + k - 1) % k];
    }
  }

  emb.face_of_.assign(emb.origin_.size(), -1);
  for (Dart start = 0; start < emb.dart_count(); ++start) {
    if (emb.face_of_[start] != -1) continue;
    FaceWalk walk;
    const int id = static_cast<int>(emb.faces_.size());
    Dart d = start;
    do {
      emb.face_of_[d] = id;
      walk.darts.push_back(d);
      d = emb.face_next(d);
    } while (d != start);
    emb.faces_.push_back(std::move(walk));
  }

  // Euler check per component: v_i - e_i + f_i = 2 for every component with an edge.
  Graph g = Graph::from_edges(n, edges);
  int comps = 0;
  auto comp = connected_components(g, &comps);
  std::vector<int> v_count(static_cast<std::size_t>(comps), 0);
  std::vector<int> e_count(static_cast<std::size_t>(comps), 0);
  std::vector<int> f_count(static_cast<std::size_t>(comps), 0);
  for (Vertex u = 0; u < n; ++u) ++v_count[comp[u]];
  for (const auto& e : edges) ++e_count[comp[e.u]];
  for (const auto& f : emb.faces_) ++f_count[comp[emb.origin_[f.darts.front()]]];
  int nontrivial = 0;
  for (int c = 0; c < comps; ++c) {
    if (e_count[c] == 0) continue;
    ++nontrivial;
    int chi = v_count[c] - e_count[c] + f_count[c];
    if (chi != 2) {
      throw Error(ErrorCode::kNonPlanarRotation,
                  "component " + std::to_string(c) + " has Euler characteristic " + std::to_string(chi) +
                      " (genus " + std::to_string((2 - chi) / 2) + ")");
    }
  }
  emb.component_count_ = comps;
  emb.face_count_ = static_cast<int>(emb.faces_.size()) - std::max(nontrivial - 1, 0);
  if (nontrivial == 0) emb.face_count_ = 1;
  return emb;
}

Dart PlanarEmbedding::find_dart(Vertex u, Vertex v) const {
  if (u < 0 || u >= vertex_count()) return kNoDart;
  for (Dart d : rotation_[u]) {
    if (head(d) == v) return d;
  }
  return kNoDart;
}

int PlanarEmbedding::find_edge(Vertex u, Vertex v) const {
  Dart d = find_dart(u, v);
  return d == kNoDart ? -1 : edge_of(d);
}

Graph PlanarEmbedding::graph() const {
  Graph g(vertex_count());
  for (int e = 0; e < edge_count(); ++e) g.add_edge(origin_[2 * e], origin_[2 * e + 1]);
  return g;
}

RotationSpec PlanarEmbedding::rotation_spec() const {
  RotationSpec spec(rotation_.size());
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    for (Dart d : rotation_[v]) spec[v].push_back(head(d));
  }
  return spec;
}

std::vector<FaceWalk> trace_faces(const PlanarEmbedding& emb) { return emb.faces(); }

std::vector<Vertex> face_vertices(const PlanarEmbedding& emb, const FaceWalk& face) {
  std::vector<Vertex> out;
  out.reserve(face.darts.size());
  for (Dart d : face.darts) out.push_back(emb.origin(d));
  return out;
}

DegreeProfile degree_profile(const PlanarEmbedding& emb) {
  DegreeProfile p;
  p.degree.resize(static_cast<std::size_t>(emb.vertex_count()));
  for (Vertex v = 0; v < emb.vertex_count(); ++v) {
    p.degree[v] = emb.degree(v);
    ++p.census[p.degree[v]];
  }
  p.min_degree = p.degree.empty() ? 0 : *std::min_element(p.degree.begin(), p.degree.end());
  return p;
}

std::map<int, int> face_census(const PlanarEmbedding& emb) {
  std::map<int, int> census;
  for (const auto& f : emb.faces()) ++census[f.length()];
  return census;
}

}  // namespace turan
