#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan_lab/embedding.hpp"

namespace turan {

struct PlanarityResult {
  bool planar = false;
  std::optional<PlanarEmbedding> embedding;  // present iff planar
};

inline constexpr int kPlanarityOrderBudget = 100'000;

/// Boyer-Myrvold test; the embedding is re-validated as genus 0.
/// Throws Error(kBudgetExceeded) above kPlanarityOrderBudget vertices.
PlanarityResult planarity_test(const Graph& g);

struct OracleLimits {
  int max_order = 7;
  /// Edge-subset masks the labelled enumeration may visit (2^(n choose 2)).
  std::uint64_t mask_budget = std::uint64_t{1} << 22;
  /// Graphs the augmentation path may hold in one level.
  std::uint64_t level_budget = 2'000'000;
  unsigned workers = 0;  // 0: hardware concurrency
};

/// Defaults, with max_order taken from TURAN_LAB_BUDGET when set to a positive
/// integer.
OracleLimits oracle_limits_from_env();

struct EnumerationResult {
  int n = 0;
  int max_edges = 0;
  int corollary_bound = 0;  // floor(18(n-2)/7)
  std::string method;       // "subsets" or "augmentation"
  /// Extremal graphs up to isomorphism, canonically relabelled, sorted by code.
  std::vector<Graph> witnesses;
  std::uint64_t examined = 0;
  std::uint64_t c6_free = 0;
  std::uint64_t planar = 0;  // planar and C6-free
};

/// Exhaustive over all labelled graphs on n vertices (edge-subset masks).
/// Throws Error(kBudgetExceeded) if n > limits.max_order or the mask count
/// exceeds limits.mask_budget, Error(kInvalidK) for n < 3.
EnumerationResult max_edges_c6free_planar(int n, const OracleLimits& limits = {});

/// Second, independent path: grows the hereditary class (planar and C6-free)
/// one edge at a time from the empty graph with isomorphism dedup, cycle
/// checks by the subset oracle. Same contract as max_edges_c6free_planar.
EnumerationResult max_edges_c6free_planar_augment(int n, const OracleLimits& limits = {});

/// Every planar C6-free graph on n vertices up to isomorphism, canonically
/// relabelled, grouped by edge count (index = edges).
std::vector<std::vector<Graph>> c6free_planar_classes(int n, const OracleLimits& limits = {});

/// All genus-0 rotation systems of a connected graph, up to orientation
/// preserving or reversing isomorphism.
std::vector<PlanarEmbedding> plane_embeddings(const Graph& g);

/// Embeddings of 2-connected, min-degree >= 3, C6-free planar graphs on n
/// vertices. Throws Error(kInvalidK) for n < 6 and kBudgetExceeded above the cap.
std::vector<PlanarEmbedding> enumerate_hypothesis_graphs(int n, const OracleLimits& limits = {});

/// floor(18(n-2)/7).
int corollary_bound(int n);

}  // namespace turan
