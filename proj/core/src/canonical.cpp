#include "turan_lab/canonical.hpp"

#include <algorithm>
#include <deque>

namespace turan {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), cell_of_(static_cast<std::size_t>(g.order()), 0) {}

  CanonicalForm run() {
    Cells start;
    if (g_.order() > 0) {
      start.emplace_back();
      for (Vertex v = 0; v < g_.order(); ++v) start.back().push_back(v);
    }
    search(refine(std::move(start)));
    return best_;
  }

 private:
  Cells refine(Cells cells) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        for (Vertex v : cells[i]) cell_of_[v] = static_cast<int>(i);
      }
      Cells next;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        for (Vertex v : cell) {
          std::vector<int> sig;
          for (Vertex w : g_.neighbors(v)) sig.push_back(cell_of_[w]);
          std::sort(sig.begin(), sig.end());
          keyed.emplace_back(std::move(sig), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t first = next.size();
        for (std::size_t j = 0; j < keyed.size(); ++j) {
          if (j == 0 || keyed[j].first != keyed[j - 1].first) next.emplace_back();
          next.back().push_back(keyed[j].second);
        }
        if (next.size() - first > 1) changed = true;
      }
      cells = std::move(next);
    }
    return cells;
  }

  bool twins(Vertex a, Vertex b) const {
    std::vector<Vertex> na, nb;
    for (Vertex x : g_.neighbors(a)) {
      if (x != b) na.push_back(x);
    }
    for (Vertex x : g_.neighbors(b)) {
      if (x != a) nb.push_back(x);
    }
    return na == nb;
  }

  void search(const Cells& cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t index = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> tried;
    for (Vertex v : *target) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, v); })) continue;
      tried.push_back(v);
      Cells split;
      split.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != index) {
          split.push_back(cells[i]);
          continue;
        }
        split.push_back({v});
        split.emplace_back();
        for (Vertex w : cells[i]) {
          if (w != v) split.back().push_back(w);
        }
      }
      search(refine(std::move(split)));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> order;
    for (const auto& c : cells) order.push_back(c.front());
    const std::size_t n = order.size();
    std::string code;
    code.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) code.push_back(g_.adjacent(order[i], order[j]) ? '1' : '0');
    }
    if (!have_ || code < best_.code) {
      have_ = true;
      best_.code = std::move(code);
      best_.order = std::move(order);
    }
  }

  const Graph& g_;
  std::vector<int> cell_of_;
  bool have_ = false;
  CanonicalForm best_;
};

// BFS from dart `start`, walking rotations forwards or backwards. Emits the
// label sequence of each vertex's rotation, vertices separated by -1.
std::vector<int> bfs_code(const PlanarEmbedding& emb, Dart start, bool reverse, std::vector<Vertex>* order = nullptr,
                          std::vector<Dart>* firsts = nullptr) {
  const int n = emb.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Dart> first(static_cast<std::size_t>(n), kNoDart);
  std::vector<Vertex> seen;
  std::deque<Vertex> queue;
  Vertex root = emb.origin(start);
  label[root] = 0;
  first[root] = start;
  seen.push_back(root);
  queue.push_back(root);
  std::vector<int> code;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    Dart d = first[v];
    for (int i = 0; i < emb.degree(v); ++i) {
      Vertex w = emb.head(d);
      if (label[w] < 0) {
        label[w] = static_cast<int>(seen.size());
        first[w] = PlanarEmbedding::twin(d);
        seen.push_back(w);
        queue.push_back(w);
      }
      code.push_back(label[w]);
      d = reverse ? emb.prev_around(d) : emb.next_around(d);
    }
    code.push_back(-1);
  }
  if (order) *order = std::move(seen);
  if (firsts) *firsts = std::move(first);
  return code;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> label(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<Vertex>(i);
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(label[e.u], label[e.v]);
  return out;
}

std::vector<int> embedding_code(const PlanarEmbedding& emb) {
  std::vector<int> best;
  for (Dart d = 0; d < emb.dart_count(); ++d) {
    for (bool reverse : {false, true}) {
      std::vector<int> code = bfs_code(emb, d, reverse);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

RotationSpec canonical_rotation(const PlanarEmbedding& emb) {
  if (emb.dart_count() == 0) return RotationSpec(static_cast<std::size_t>(emb.vertex_count()));
  Dart best_start = 0;
  std::vector<int> best;
  for (Dart d = 0; d < emb.dart_count(); ++d) {
    std::vector<int> code = bfs_code(emb, d, false);
    if (best.empty() || code < best) {
      best = std::move(code);
      best_start = d;
    }
  }
  std::vector<Vertex> order;
  std::vector<Dart> first;
  bfs_code(emb, best_start, false, &order, &first);
  std::vector<int> label(static_cast<std::size_t>(emb.vertex_count()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i);
  RotationSpec out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Dart d = first[order[i]];
    for (int k = 0; k < emb.degree(order[i]); ++k) {
      out[i].push_back(label[emb.head(d)]);
      d = emb.next_around(d);
    }
  }
  return out;
}

}  // namespace turan
