#include "turan_lab/cycles.hpp"

#include <deque>
#include <string>

#include "turan_lab/error.hpp"

namespace turan {

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int k) : g_(g), k_(k), on_path_(static_cast<std::size_t>(g.order()), false) {}

  std::optional<CycleWitness> run() {
    const int n = g_.order();
    for (Vertex s = 0; s + k_ <= n; ++s) {
      if (g_.degree(s) < 2) continue;
      anchor_ = s;
      compute_distances();
      path_.assign(1, s);
      on_path_[s] = true;
      bool found = extend();
      on_path_[s] = false;
      if (found) return CycleWitness{path_};
    }
    return std::nullopt;
  }

 private:
  // Distances from the anchor inside the subgraph on vertices >= anchor.
  void compute_distances() {
    dist_.assign(static_cast<std::size_t>(g_.order()), -1);
    std::deque<Vertex> queue{anchor_};
    dist_[anchor_] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g_.neighbors(x)) {
        if (y > anchor_ && dist_[y] == -1) {
          dist_[y] = dist_[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }

  bool extend() {
    const int have = static_cast<int>(path_.size());
    Vertex last = path_.back();
    if (have == k_) return g_.adjacent(last, anchor_) && path_[1] < path_.back();
    for (Vertex w : g_.neighbors(last)) {
      if (w <= anchor_ || on_path_[w]) continue;
      // After adding w, k - have edges remain to close the cycle.
      if (dist_[w] == -1 || dist_[w] > k_ - have) continue;
      path_.push_back(w);
      on_path_[w] = true;
      bool found = extend();
      on_path_[w] = false;
      if (found) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int k_;
  Vertex anchor_ = 0;
  std::vector<int> dist_;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
};

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

bool has_hamiltonian_cycle(const std::vector<unsigned>& adj, int k) {
  // reach[mask] = bitset of end vertices of paths from 0 covering mask.
  const unsigned full = (1u << k) - 1;
  std::vector<unsigned> reach(std::size_t{1} << k, 0);
  reach[1] = 1;
  for (unsigned mask = 1; mask <= full; ++mask) {
    if ((mask & 1u) == 0 || reach[mask] == 0) continue;
    for (int v = 0; v < k; ++v) {
      if ((reach[mask] >> v & 1u) == 0) continue;
      unsigned options = adj[v] & ~mask;
      for (int w = 0; w < k; ++w) {
        if (options >> w & 1u) reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return (reach[full] & adj[0]) != 0;
}

}  // namespace

std::optional<CycleWitness> find_cycle_of_length(const Graph& g, int k) {
  if (k < 3) throw Error(ErrorCode::kInvalidK, "cycle length " + std::to_string(k) + " < 3");
  if (k > g.order()) return std::nullopt;
  return CycleSearch(g, k).run();
}

FreenessVerdict is_c_l_free(const Graph& g, int length) {
  FreenessVerdict v;
  v.witness = find_cycle_of_length(g, length);
  v.free = !v.witness.has_value();
  return v;
}

bool is_valid_cycle(const Graph& g, const CycleWitness& w) {
  const int k = w.length();
  if (k < 3) return false;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (w.vertices[i] == w.vertices[j]) return false;
    }
    if (!g.adjacent(w.vertices[i], w.vertices[(i + 1) % k])) return false;
  }
  return true;
}

bool cycle_oracle_subsets(const Graph& g, int k, std::uint64_t budget) {
  if (k < 3 || k > 8) throw Error(ErrorCode::kInvalidK, "subset oracle supports 3 <= k <= 8, got " + std::to_string(k));
  const int n = g.order();
  if (k > n) return false;
  const std::uint64_t total = binomial(n, k);
  if (total > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " + std::to_string(total) +
                    " subsets exceeds budget " + std::to_string(budget));
  }
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = i;
  std::vector<unsigned> adj(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) {
      adj[i] = 0;
      for (int j = 0; j < k; ++j) {
        if (g.adjacent(pick[i], pick[j])) adj[i] |= 1u << j;
      }
    }
    if (has_hamiltonian_cycle(adj, k)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return false;
}

}  // namespace turan
