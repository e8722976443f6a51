#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "turan_lab/oracle.hpp"

namespace turan::test {

PlanarEmbedding triangle() { return PlanarEmbedding::build({{1, 2}, {2, 0}, {0, 1}}); }

PlanarEmbedding cycle(int n) {
  RotationSpec rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rot[v] = {(v + n - 1) % n, (v + 1) % n};
  return PlanarEmbedding::build(rot);
}

PlanarEmbedding k4() { return PlanarEmbedding::build({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}}); }

PlanarEmbedding octahedron() {
  return PlanarEmbedding::build({{1, 2, 3, 4}, {5, 2, 0, 4}, {5, 3, 0, 1}, {0, 2, 5, 4}, {1, 0, 3, 5}, {4, 3, 2, 1}});
}

PlanarEmbedding k5_minus() {
  return PlanarEmbedding::build({{2, 3, 4, 1}, {0, 4, 2}, {1, 4, 3, 0}, {4, 0, 2}, {1, 0, 3, 2}});
}

RotationSpec k5_rotation() { return {{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}}; }

PlanarEmbedding k4_plus_pendant() {
  return PlanarEmbedding::build({{1, 3, 2, 4}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}, {0}});
}

namespace {

PlanarEmbedding embed(int n, const std::vector<Edge>& edges) {
  PlanarityResult r = planarity_test(Graph::from_edges(n, edges));
  if (!r.planar) throw std::logic_error("fixture is not planar");
  return *r.embedding;
}

}  // namespace

PlanarEmbedding stacked6() {
  return embed(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}});
}

PlanarEmbedding k5minus_ring(int t) {
  std::vector<Edge> edges;
  for (int c = 0; c < t; ++c) {
    const int b = 5 * c;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        if (i == 3 && j == 4) continue;
        edges.push_back({b + i, b + j});
      }
    }
    edges.push_back(make_edge(b + 1, (5 * (c + 1)) % (5 * t)));
  }
  return embed(5 * t, edges);
}

PlanarEmbedding b4b_two_four_faces() {
  return PlanarEmbedding::build({{1, 3, 5, 4},
                                 {0, 2, 3},
                                 {1, 4, 5, 3},
                                 {0, 1, 2},
                                 {0, 6, 2},
                                 {0, 2, 7},
                                 {4, 8, 7},
                                 {5, 6, 10, 9},
                                 {6, 9, 10},
                                 {7, 10, 8},
                                 {7, 8, 9}});
}

PlanarEmbedding b5d_four_face() {
  return PlanarEmbedding::build({{1, 4, 5, 3, 2},
                                 {0, 2, 4},
                                 {0, 3, 5, 4, 1},
                                 {0, 7, 2},
                                 {0, 1, 2},
                                 {0, 2, 6},
                                 {5, 9, 8},
                                 {3, 11, 10},
                                 {6, 9, 12},
                                 {6, 12, 8},
                                 {7, 11, 12},
                                 {7, 12, 10},
                                 {8, 9, 10, 11}});
}

PlanarEmbedding shared_eleven_face() {
  return PlanarEmbedding::build({{8, 1, 11, 10, 9},
                                 {9, 10, 11, 0, 2},
                                 {3, 1},
                                 {4, 2},
                                 {5, 14, 13, 12, 3},
                                 {6, 12, 13, 14, 4},
                                 {7, 5},
                                 {8, 6},
                                 {7, 0},
                                 {0, 10, 1},
                                 {9, 0, 11, 1},
                                 {10, 0, 1},
                                 {5, 4, 13},
                                 {5, 12, 4, 14},
                                 {5, 13, 4}});
}

Graph k33() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) edges.push_back({a, b});
  }
  return Graph::from_edges(6, edges);
}

Graph k5() {
  Graph g(5);
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) g.add_edge(a, b);
  }
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

Graph random_graph_edges(int n, int m, std::mt19937_64& rng) {
  std::vector<Edge> all;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) all.push_back({a, b});
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(std::min<int>(m, static_cast<int>(all.size()))));
  return Graph::from_edges(n, all);
}

bool brute_force_has_cycle(const Graph& g, int k) {
  const int n = g.order();
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) vs.push_back(i);
    }
    // Fix vs[0] first and permute the rest.
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = g.adjacent(vs[i], vs[(i + 1) % k]);
      if (ok) return true;
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

namespace {

int faces_of(const std::vector<std::vector<Vertex>>& rot, const std::vector<Vertex>& comp) {
  // Darts as (u, index in rot[u]); face successor of u->w is w->next after u.
  std::map<std::pair<Vertex, Vertex>, bool> seen;
  int faces = 0;
  for (Vertex u : comp) {
    for (Vertex w : rot[u]) {
      if (seen[{u, w}]) continue;
      ++faces;
      Vertex a = u, b = w;
      while (!seen[{a, b}]) {
        seen[{a, b}] = true;
        const auto& r = rot[b];
        std::size_t i = static_cast<std::size_t>(std::find(r.begin(), r.end(), a) - r.begin());
        Vertex c = r[(i + 1) % r.size()];
        a = b;
        b = c;
      }
    }
  }
  return faces;
}

}  // namespace

bool brute_force_planar(const Graph& g) {
  int count = 0;
  std::vector<int> comp_of = connected_components(g, &count);
  for (int c = 0; c < count; ++c) {
    std::vector<Vertex> comp;
    int edges2 = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (comp_of[v] == c) {
        comp.push_back(v);
        edges2 += g.degree(v);
      }
    }
    const int v = static_cast<int>(comp.size());
    const int e = edges2 / 2;
    if (e == 0) continue;
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.order()));
    for (Vertex x : comp) rot[x] = g.neighbors(x);
    bool found = false;
    while (true) {
      if (v - e + faces_of(rot, comp) == 2) {
        found = true;
        break;
      }
      std::size_t i = 0;
      for (; i < comp.size(); ++i) {
        auto& r = rot[comp[i]];
        if (r.size() > 2 && std::next_permutation(r.begin() + 1, r.end())) break;
      }
      if (i == comp.size()) break;
    }
    if (!found) return false;
  }
  return true;
}

Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph::from_edges(g.order(), edges);
}

}  // namespace turan::test
