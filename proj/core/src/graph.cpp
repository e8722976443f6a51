#include "turan_lab/graph.hpp"

#include <algorithm>
#include <string>

#include "turan_lab/error.hpp"

namespace turan {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kAsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::kMultiEdgeOrLoop: return "MultiEdgeOrLoop";
    case ErrorCode::kNonPlanarRotation: return "NonPlanarRotation";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kUnclassifiableBlock: return "UnclassifiableBlock";
    case ErrorCode::kNotTwoConnected: return "NotTwoConnected";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kGroupingFailed: return "GroupingFailed";
    case ErrorCode::kPropositionViolated: return "PropositionViolated";
    case ErrorCode::kNotC6Free: return "NotC6Free";
    case ErrorCode::kNotPlanar: return "NotPlanar";
    case ErrorCode::kInvalidL: return "InvalidL";
    case ErrorCode::kInvalidM: return "InvalidM";
    case ErrorCode::kUnvalidatedBase: return "UnvalidatedBase";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Graph::Graph(int order) : adjacency_(static_cast<std::size_t>(std::max(order, 0))) {}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::kMultiEdgeOrLoop, "loop at vertex " + std::to_string(e.u));
    if (!g.add_edge(e.u, e.v)) {
      throw Error(ErrorCode::kMultiEdgeOrLoop,
                  "repeated edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) throw Error(ErrorCode::kInvalidVertex, "vertex " + std::to_string(v));
}

bool Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw Error(ErrorCode::kMultiEdgeOrLoop, "loop at vertex " + std::to_string(a));
  auto& na = adjacency_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) return false;
  na.insert(it, b);
  auto& nb = adjacency_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  auto& na = adjacency_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it == na.end() || *it != b) return false;
  na.erase(it);
  auto& nb = adjacency_[b];
  nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
  --edge_count_;
  return true;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || a >= order() || b < 0 || b >= order()) return false;
  const auto& na = adjacency_[a];
  return std::binary_search(na.begin(), na.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::min_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) {
    if (v == 0 || degree(v) < best) best = degree(v);
  }
  return best;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(static_cast<std::size_t>(order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    index[keep[i]] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : adjacency_[keep[i]]) {
      if (index[w] > static_cast<int>(i)) out.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  return out;
}

std::vector<int> connected_components(const Graph& g, int* component_count) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] == -1) {
          comp[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  if (component_count != nullptr) *component_count = count;
  return comp;
}

int component_count(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  std::vector<Vertex> keep;
  keep.reserve(static_cast<std::size_t>(g.order()) - 1);
  for (Vertex cut = 0; cut < g.order(); ++cut) {
    keep.clear();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != cut) keep.push_back(v);
    }
    if (!is_connected(g.induced(keep))) return false;
  }
  return true;
}

}  // namespace turan
