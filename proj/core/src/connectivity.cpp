#include "turan_lab/connectivity.hpp"

#include <algorithm>
#include <set>

namespace turan {

std::map<int, int> BlockCutDecomposition::size_classes() const {
  std::map<int, int> out;
  for (const auto& b : blocks) ++out[std::min(b.order(), 6)];
  return out;
}

namespace {

// Iterative Hopcroft-Tarjan with an edge stack.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(static_cast<std::size_t>(g.order()), -1), low_(disc_.size(), 0) {}

  BlockCutDecomposition run() {
    for (Vertex root = 0; root < g_.order(); ++root) {
      if (disc_[root] == -1 && g_.degree(root) > 0) visit(root);
    }
    finish();
    return std::move(out_);
  }

 private:
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next = 0;
  };

  void visit(Vertex root) {
    std::vector<Frame> stack{{root, -1, 0}};
    disc_[root] = low_[root] = timer_++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& nbrs = g_.neighbors(top.v);
      if (top.next < nbrs.size()) {
        Vertex w = nbrs[top.next++];
        if (w == top.parent) continue;
        if (disc_[w] == -1) {
          edges_.push_back(make_edge(top.v, w));
          disc_[w] = low_[w] = timer_++;
          stack.push_back({w, top.v, 0});
        } else if (disc_[w] < disc_[top.v]) {
          edges_.push_back(make_edge(top.v, w));
          low_[top.v] = std::min(low_[top.v], disc_[w]);
        }
        continue;
      }
      Frame done = top;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex p = stack.back().v;
      low_[p] = std::min(low_[p], low_[done.v]);
      if (low_[done.v] >= disc_[p]) pop_block(make_edge(p, done.v));
    }
  }

  void pop_block(Edge until) {
    BiconnectedBlock block;
    std::set<Vertex> verts;
    while (true) {
      Edge e = edges_.back();
      edges_.pop_back();
      block.edges.push_back(e);
      verts.insert(e.u);
      verts.insert(e.v);
      if (e == until) break;
    }
    std::sort(block.edges.begin(), block.edges.end());
    block.vertices.assign(verts.begin(), verts.end());
    out_.blocks.push_back(std::move(block));
  }

  void finish() {
    std::sort(out_.blocks.begin(), out_.blocks.end(),
              [](const BiconnectedBlock& a, const BiconnectedBlock& b) { return a.edges.front() < b.edges.front(); });
    std::vector<int> membership(static_cast<std::size_t>(g_.order()), 0);
    for (const auto& b : out_.blocks) {
      for (Vertex v : b.vertices) ++membership[v];
    }
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (membership[v] >= 2) out_.cut_vertices.push_back(v);
    }
    for (std::size_t i = 0; i < out_.blocks.size(); ++i) {
      for (Vertex v : out_.blocks[i].vertices) {
        if (membership[v] >= 2) out_.tree_edges.emplace_back(static_cast<int>(i), v);
      }
    }
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  int timer_ = 0;
  std::vector<Edge> edges_;
  BlockCutDecomposition out_;
};

}  // namespace

BlockCutDecomposition biconnected_blocks(const Graph& g) { return BlockFinder(g).run(); }

PeelResult peel_min_degree(const Graph& g, int threshold) {
  const int n = g.order();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  // (degree, vertex) ordered set gives "lowest id among minimum degree" directly.
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.insert({degree[v], v});
  }

  PeelResult result;
  while (!queue.empty() && queue.begin()->first < threshold) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    alive[v] = false;
    result.trace.push_back({v, d});
    for (Vertex w : g.neighbors(v)) {
      if (!alive[w]) continue;
      queue.erase({degree[w], w});
      --degree[w];
      queue.insert({degree[w], w});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) result.kept.push_back(v);
  }
  result.subgraph = g.induced(result.kept);
  return result;
}

}  // namespace turan
