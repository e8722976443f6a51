#include "turan_lab/blocks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "turan_lab/error.hpp"

namespace turan {

std::string_view to_string(BlockType type) noexcept {
  switch (type) {
    case BlockType::kB2: return "B2";
    case BlockType::kB3: return "B3";
    case BlockType::kB4a: return "B4a";
    case BlockType::kB4b: return "B4b";
    case BlockType::kB5a: return "B5a";
    case BlockType::kB5b: return "B5b";
    case BlockType::kB5c: return "B5c";
    case BlockType::kB5d: return "B5d";
    case BlockType::kOversized: return "Oversized";
  }
  return "?";
}

bool TriangularBlock::contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

bool TriangularBlock::contains(Edge e) const { return std::binary_search(edges.begin(), edges.end(), e); }

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::vector<Vertex> vertices_of(const std::vector<Edge>& edges) {
  std::vector<Vertex> out;
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<TriangularBlock> decompose_triangular_blocks(const PlanarEmbedding& emb) {
  UnionFind uf(emb.edge_count());
  for (const FaceWalk& face : emb.faces()) {
    if (face.length() != 3) continue;
    int a = PlanarEmbedding::edge_of(face.darts[0]);
    uf.unite(a, PlanarEmbedding::edge_of(face.darts[1]));
    uf.unite(a, PlanarEmbedding::edge_of(face.darts[2]));
  }
  // Roots are the smallest edge id of each class, so ordering by root orders
  // blocks by their smallest edge.
  std::map<int, std::vector<Edge>> classes;
  for (int e = 0; e < emb.edge_count(); ++e) classes[uf.find(e)].push_back(emb.edge(e));

  std::vector<TriangularBlock> blocks;
  blocks.reserve(classes.size());
  for (auto& [root, edges] : classes) {
    TriangularBlock b;
    b.edges = std::move(edges);
    b.vertices = vertices_of(b.edges);
    blocks.push_back(std::move(b));
  }
  for (auto& b : blocks) b.type = classify_block(b, emb);
  JunctionMap junctions = junction_map(blocks, emb.vertex_count());
  for (auto& b : blocks) b.exterior = exterior_structure(b, emb, junctions);
  return blocks;
}

std::vector<Edge> closure_block(const PlanarEmbedding& emb, Edge seed) {
  int start = emb.find_edge(seed.u, seed.v);
  if (start < 0) throw Error(ErrorCode::kInvalidVertex, "closure seed is not an edge");
  std::vector<bool> in(static_cast<std::size_t>(emb.edge_count()), false);
  std::deque<int> queue{start};
  in[start] = true;
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (Dart d : {2 * e, 2 * e + 1}) {
      const FaceWalk& face = emb.faces()[emb.face_of(d)];
      if (face.length() != 3) continue;
      for (Dart x : face.darts) {
        int other = PlanarEmbedding::edge_of(x);
        if (!in[other]) {
          in[other] = true;
          queue.push_back(other);
        }
      }
    }
  }
  std::vector<Edge> out;
  for (int e = 0; e < emb.edge_count(); ++e) {
    if (in[e]) out.push_back(emb.edge(e));
  }
  return out;
}

int degree_in_block(const TriangularBlock& block, Vertex v) {
  int d = 0;
  for (const Edge& e : block.edges) d += (e.u == v) + (e.v == v);
  return d;
}

BlockType classify_block(const TriangularBlock& block, const PlanarEmbedding& /*emb*/) {
  const int n = block.order();
  const int m = block.size();
  if (n >= 6) return BlockType::kOversized;
  std::vector<int> degrees;
  for (Vertex v : block.vertices) degrees.push_back(degree_in_block(block, v));
  std::sort(degrees.rbegin(), degrees.rend());
  using D = std::vector<int>;

  if (n == 2 && m == 1) return BlockType::kB2;
  if (n == 3 && m == 3) return BlockType::kB3;
  if (n == 4 && m == 6) return BlockType::kB4a;
  if (n == 4 && m == 5 && degrees == D{3, 3, 2, 2}) return BlockType::kB4b;
  if (n == 5) {
    if (m == 9 && degrees == D{4, 4, 4, 3, 3}) return BlockType::kB5a;
    if (m == 8 && degrees == D{4, 3, 3, 3, 3}) return BlockType::kB5b;
    if (m == 8 && degrees == D{4, 4, 3, 3, 2}) return BlockType::kB5d;
    if (m == 7 && degrees == D{4, 3, 3, 2, 2}) return BlockType::kB5c;
  }
  std::string shape = std::to_string(n) + " vertices, " + std::to_string(m) + " edges, degrees";
  for (int d : degrees) shape += " " + std::to_string(d);
  throw Error(ErrorCode::kUnclassifiableBlock, shape);
}

JunctionMap junction_map(const std::vector<TriangularBlock>& blocks, int vertex_count) {
  JunctionMap map;
  map.count.assign(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& b : blocks) {
    for (Vertex v : b.vertices) ++map.count[v];
  }
  return map;
}

ExteriorStructure exterior_structure(const TriangularBlock& block, const PlanarEmbedding& emb,
                                     const JunctionMap& junctions) {
  ExteriorStructure out;
  std::map<Vertex, std::vector<Vertex>> ext_adj;
  for (const Edge& e : block.edges) {
    int id = emb.find_edge(e.u, e.v);
    std::vector<int> faces;
    for (Dart d : {2 * id, 2 * id + 1}) {
      int f = emb.face_of(d);
      if (emb.faces()[f].length() != 3) faces.push_back(f);
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.empty()) {
      out.interior_edges.push_back(e);
    } else {
      out.exterior_edges.push_back({e, std::move(faces)});
      ext_adj[e.u].push_back(e.v);
      ext_adj[e.v].push_back(e.u);
    }
  }
  for (auto& [v, nbrs] : ext_adj) std::sort(nbrs.begin(), nbrs.end());

  auto is_stop = [&](Vertex v) { return junctions.is_junction(v) || ext_adj[v].size() != 2; };
  std::map<Edge, bool> used;
  auto walk = [&](Vertex from, Vertex first) {
    std::vector<Vertex> path{from};
    Vertex prev = from;
    Vertex cur = first;
    used[make_edge(from, first)] = true;
    while (true) {
      path.push_back(cur);
      if (cur == from || is_stop(cur)) break;
      Vertex next = ext_adj[cur][0] == prev ? ext_adj[cur][1] : ext_adj[cur][0];
      if (used[make_edge(cur, next)]) break;
      used[make_edge(cur, next)] = true;
      prev = cur;
      cur = next;
    }
    out.exterior_paths.push_back(std::move(path));
  };

  for (auto& [v, nbrs] : ext_adj) {
    if (!is_stop(v)) continue;
    for (Vertex w : nbrs) {
      if (!used[make_edge(v, w)]) walk(v, w);
    }
  }
  // Leftover cycles through non-junction vertices only.
  for (auto& [v, nbrs] : ext_adj) {
    for (Vertex w : nbrs) {
      if (!used[make_edge(v, w)]) walk(v, w);
    }
  }
  return out;
}

std::vector<int> edge_owner(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks) {
  std::vector<int> owner(static_cast<std::size_t>(emb.edge_count()), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (const Edge& e : blocks[i].edges) owner[emb.find_edge(e.u, e.v)] = static_cast<int>(i);
  }
  return owner;
}

}  // namespace turan
