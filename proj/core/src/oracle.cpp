#include "turan_lab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <future>
#include <map>
#include <string>
#include <thread>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "turan_lab/canonical.hpp"
#include "turan_lab/cycles.hpp"
#include "turan_lab/error.hpp"

namespace turan {

PlanarityResult planarity_test(const Graph& g) {
  if (g.order() > kPlanarityOrderBudget) {
    throw Error(ErrorCode::kBudgetExceeded, "planarity_test order " + std::to_string(g.order()));
  }
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  int index = 0;
  for (const Edge& e : g.edges()) {
    auto [desc, ok] = boost::add_edge(e.u, e.v, bg);
    boost::put(boost::edge_index, bg, desc, index++);
  }
  std::vector<std::vector<EdgeDesc>> rotation(static_cast<std::size_t>(g.order()));
  auto embedding = boost::make_iterator_property_map(rotation.begin(), boost::get(boost::vertex_index, bg));
  PlanarityResult out;
  out.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                   boost::boyer_myrvold_params::embedding = embedding);
  if (out.planar) {
    RotationSpec spec(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      for (const EdgeDesc& e : rotation[v]) {
        int a = static_cast<int>(boost::source(e, bg));
        int b = static_cast<int>(boost::target(e, bg));
        spec[v].push_back(a == v ? b : a);
      }
    }
    out.embedding = PlanarEmbedding::build(spec);
  }
  return out;
}

OracleLimits oracle_limits_from_env() {
  OracleLimits limits;
  if (const char* env = std::getenv("TURAN_LAB_BUDGET")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value < 64) limits.max_order = static_cast<int>(value);
  }
  return limits;
}

int corollary_bound(int n) { return 18 * (n - 2) / 7; }

namespace {

unsigned worker_count(const OracleLimits& limits) {
  unsigned w = limits.workers ? limits.workers : std::thread::hardware_concurrency();
  return std::max(1u, w);
}

void check_order(int n, const OracleLimits& limits) {
  if (n < 3) throw Error(ErrorCode::kInvalidK, "oracle needs n >= 3");
  if (n > limits.max_order) {
    throw Error(ErrorCode::kBudgetExceeded,
                "n = " + std::to_string(n) + " above cap " + std::to_string(limits.max_order));
  }
}

// Any nonplanar graph contains a K5 or K3,3 subdivision, so needs 9 edges.
bool planar(const Graph& g) { return g.size() <= 8 || planarity_test(g).planar; }

// Bit-parallel 6-cycle test for the labelled sweep (independent of cycles.cpp).
class BitCycle6 {
 public:
  BitCycle6(const std::uint32_t* adj, int n) : adj_(adj), n_(n) {}

  bool found() {
    for (anchor_ = 0; anchor_ + 6 <= n_; ++anchor_) {
      higher_ = ~((std::uint32_t{2} << anchor_) - 1);
      if (extend(anchor_, std::uint32_t{1} << anchor_, 1)) return true;
    }
    return false;
  }

 private:
  bool extend(int cur, std::uint32_t used, int depth) {
    if (depth == 6) return (adj_[cur] >> anchor_) & 1u;
    std::uint32_t options = adj_[cur] & ~used & higher_;
    while (options) {
      int w = std::countr_zero(options);
      options &= options - 1;
      if (extend(w, used | (std::uint32_t{1} << w), depth + 1)) return true;
    }
    return false;
  }

  const std::uint32_t* adj_;
  int n_;
  int anchor_ = 0;
  std::uint32_t higher_ = 0;
};

struct SweepPart {
  int best = -1;
  std::vector<std::uint64_t> best_masks;
  std::uint64_t examined = 0;
  std::uint64_t c6_free = 0;
  std::uint64_t planar = 0;
};

Graph graph_of_mask(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  Graph g(n);
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    if ((mask >> b) & 1u) g.add_edge(pairs[b].u, pairs[b].v);
  }
  return g;
}

SweepPart sweep(int n, const std::vector<Edge>& pairs, std::uint64_t begin, std::uint64_t end) {
  SweepPart part;
  const int cap = 3 * n - 6;
  std::uint32_t adj[32];
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    ++part.examined;
    const int e = std::popcount(mask);
    if (e > cap) continue;
    std::fill(adj, adj + n, 0u);
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const Edge& p = pairs[static_cast<std::size_t>(std::countr_zero(m))];
      adj[p.u] |= 1u << p.v;
      adj[p.v] |= 1u << p.u;
    }
    if (BitCycle6(adj, n).found()) continue;
    ++part.c6_free;
    if (e > 8 && !planarity_test(graph_of_mask(n, pairs, mask)).planar) continue;
    ++part.planar;
    if (e > part.best) {
      part.best = e;
      part.best_masks.clear();
    }
    if (e == part.best) part.best_masks.push_back(mask);
  }
  return part;
}

std::vector<Graph> dedup(const std::vector<Graph>& graphs) {
  std::map<std::string, Graph> unique;
  for (const Graph& g : graphs) {
    CanonicalForm cf = canonical_form(g);
    unique.emplace(cf.code, relabel(g, cf.order));
  }
  std::vector<Graph> out;
  for (auto& [code, g] : unique) out.push_back(std::move(g));
  return out;
}

// Level-by-level closure of the hereditary class from the empty graph.
std::vector<std::vector<Graph>> grow_classes(int n, const OracleLimits& limits, bool subset_cycles,
                                             std::uint64_t* examined) {
  auto has_c6 = [&](const Graph& g) {
    if (n < 6) return false;
    return subset_cycles ? cycle_oracle_subsets(g, 6) : find_cycle_of_length(g, 6).has_value();
  };
  std::vector<std::vector<Graph>> levels{{Graph(n)}};
  while (true) {
    std::map<std::string, Graph> next;
    for (const Graph& g : levels.back()) {
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
          if (g.adjacent(a, b)) continue;
          Graph h = g;
          h.add_edge(a, b);
          if (examined) ++*examined;
          CanonicalForm cf = canonical_form(h);
          if (next.count(cf.code)) continue;
          if (has_c6(h) || !planar(h)) continue;
          next.emplace(cf.code, relabel(h, cf.order));
          if (next.size() > limits.level_budget) {
            throw Error(ErrorCode::kBudgetExceeded, "augmentation level exceeds " + std::to_string(limits.level_budget));
          }
        }
      }
    }
    if (next.empty()) break;
    std::vector<Graph> level;
    level.reserve(next.size());
    for (auto& [code, g] : next) level.push_back(std::move(g));
    levels.push_back(std::move(level));
  }
  return levels;
}

// Face count of a rotation system given as position tables; -1 if malformed.
int count_faces(const RotationSpec& rot, const std::vector<std::vector<int>>& pos) {
  const int n = static_cast<int>(rot.size());
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) seen[v].assign(rot[v].size(), false);
  int faces = 0;
  for (int v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      if (seen[v][i]) continue;
      ++faces;
      int u = v;
      std::size_t k = i;
      while (!seen[u][k]) {
        seen[u][k] = true;
        int w = rot[u][k];
        int back = pos[w][u];
        std::size_t next = (static_cast<std::size_t>(back) + 1) % rot[w].size();
        u = w;
        k = next;
      }
    }
  }
  return faces;
}

}  // namespace

EnumerationResult max_edges_c6free_planar(int n, const OracleLimits& limits) {
  check_order(n, limits);
  const int pair_count = n * (n - 1) / 2;
  if (pair_count >= 63 || (std::uint64_t{1} << pair_count) > limits.mask_budget) {
    throw Error(ErrorCode::kBudgetExceeded, "2^" + std::to_string(pair_count) + " masks above mask budget");
  }
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
  }
  const std::uint64_t total = std::uint64_t{1} << pair_count;
  const unsigned workers = std::min<std::uint64_t>(worker_count(limits), total);
  std::vector<std::future<SweepPart>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t begin = total * w / workers, end = total * (w + 1) / workers;
    parts.push_back(std::async(std::launch::async, sweep, n, std::cref(pairs), begin, end));
  }
  SweepPart merged;
  for (auto& f : parts) {
    SweepPart p = f.get();
    merged.examined += p.examined;
    merged.c6_free += p.c6_free;
    merged.planar += p.planar;
    if (p.best > merged.best) {
      merged.best = p.best;
      merged.best_masks.clear();
    }
    if (p.best == merged.best) merged.best_masks.insert(merged.best_masks.end(), p.best_masks.begin(), p.best_masks.end());
  }
  EnumerationResult out;
  out.n = n;
  out.method = "subsets";
  out.max_edges = merged.best;
  out.corollary_bound = corollary_bound(n);
  out.examined = merged.examined;
  out.c6_free = merged.c6_free;
  out.planar = merged.planar;
  std::vector<Graph> witnesses;
  for (std::uint64_t m : merged.best_masks) witnesses.push_back(graph_of_mask(n, pairs, m));
  out.witnesses = dedup(witnesses);
  return out;
}

EnumerationResult max_edges_c6free_planar_augment(int n, const OracleLimits& limits) {
  check_order(n, limits);
  EnumerationResult out;
  out.n = n;
  out.method = "augmentation";
  out.corollary_bound = corollary_bound(n);
  auto levels = grow_classes(n, limits, n <= 8, &out.examined);
  out.max_edges = static_cast<int>(levels.size()) - 1;
  out.witnesses = levels.back();
  for (const auto& level : levels) out.planar += level.size();
  out.c6_free = out.planar;
  return out;
}

std::vector<std::vector<Graph>> c6free_planar_classes(int n, const OracleLimits& limits) {
  check_order(n, limits);
  return grow_classes(n, limits, false, nullptr);
}

std::vector<PlanarEmbedding> plane_embeddings(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw Error(ErrorCode::kInvalidVertex, "plane_embeddings needs a connected graph");
  double combos = 1;
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 2; i < g.degree(v); ++i) combos *= i;
  }
  if (combos > 1e7) throw Error(ErrorCode::kBudgetExceeded, "too many rotation systems");

  RotationSpec rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) rot[v] = g.neighbors(v);
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  const int target = 2 - n + static_cast<int>(g.size());
  std::map<std::vector<int>, PlanarEmbedding> unique;
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = static_cast<int>(i);
    }
    if (count_faces(rot, pos) == target) {
      PlanarEmbedding emb = PlanarEmbedding::build(rot);
      unique.emplace(embedding_code(emb), std::move(emb));
    }
    // Odometer over the permutations of every rotation tail.
    Vertex v = 0;
    for (; v < n; ++v) {
      if (rot[v].size() > 2 && std::next_permutation(rot[v].begin() + 1, rot[v].end())) break;
    }
    if (v == n) break;
  }
  std::vector<PlanarEmbedding> out;
  for (auto& [code, emb] : unique) out.push_back(std::move(emb));
  return out;
}

std::vector<PlanarEmbedding> enumerate_hypothesis_graphs(int n, const OracleLimits& limits) {
  if (n < 6) throw Error(ErrorCode::kInvalidK, "hypothesis graphs need n >= 6");
  check_order(n, limits);
  std::vector<PlanarEmbedding> out;
  for (const auto& level : c6free_planar_classes(n, limits)) {
    for (const Graph& g : level) {
      if (g.min_degree() < 3 || !is_two_connected(g)) continue;
      for (auto& emb : plane_embeddings(g)) out.push_back(std::move(emb));
    }
  }
  return out;
}

}  // namespace turan
