#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turan_lab/graph.hpp"

namespace turan {

/// Vertex sequence of a k-cycle; consecutive entries (cyclically) are adjacent.
struct CycleWitness {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Returns the lexicographically smallest canonical witness: the anchor is the
/// smallest vertex on the cycle and the second vertex is smaller than the last.
/// Throws Error(kInvalidK) for k < 3.
std::optional<CycleWitness> find_cycle_of_length(const Graph& g, int k);

struct FreenessVerdict {
  bool free = true;
  std::optional<CycleWitness> witness;
};

FreenessVerdict is_c_l_free(const Graph& g, int length);

/// Independent edge-membership check of a witness against g.
bool is_valid_cycle(const Graph& g, const CycleWitness& w);

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// Brute force: does some k-subset carry a Hamiltonian cycle of its induced
/// subgraph? Requires 3 <= k <= 8 and C(n, k) <= budget (else kBudgetExceeded).
bool cycle_oracle_subsets(const Graph& g, int k, std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace turan
