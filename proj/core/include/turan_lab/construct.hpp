#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turan_lab/cycles.hpp"
#include "turan_lab/embedding.hpp"

namespace turan {

enum class BaseFamily { kG0, kH0, kCycle, kUserSupplied };

std::string_view to_string(BaseFamily family) noexcept;

/// A plane graph whose faces all have length ell+1 and whose degrees are all 2
/// or 3. Only obtainable through validate(), so holding one is proof of the
/// census.
class BaseGraph {
 public:
  /// Throws Error(kUnvalidatedBase) describing the first census failure. For
  /// kG0 / kH0 the order and size formulas in `parameter` are checked too.
  static BaseGraph validate(PlanarEmbedding emb, BaseFamily family, int parameter = 0);

  const PlanarEmbedding& embedding() const noexcept { return emb_; }
  BaseFamily family() const noexcept { return family_; }
  int parameter() const noexcept { return parameter_; }
  int ell() const noexcept { return ell_; }
  int degree2_count() const noexcept { return deg2_; }
  int degree3_count() const noexcept { return deg3_; }

 private:
  BaseGraph() = default;

  PlanarEmbedding emb_;
  BaseFamily family_ = BaseFamily::kUserSupplied;
  int parameter_ = 0;
  int ell_ = 0;
  int deg2_ = 0;
  int deg3_ = 0;
};

/// G0(k): 10k+7 vertices, 14k+7 edges, every face a 7-face. k = 0 is C7.
/// Throws Error(kInvalidK) for k < 0.
BaseGraph heptagonal_base(int k);

/// H0(k): 10k+2 vertices, 14k edges, every face a 7-face. Throws kInvalidK for k < 1.
BaseGraph reduced_base(int k);

/// C_{ell+1}. Throws Error(kInvalidL) for ell < 6.
BaseGraph cycle_base(int ell);

struct HalvedGraph {
  PlanarEmbedding embedding;
  int base_order = 0;
  /// Halving vertex of each base edge, indexed by base edge id.
  std::vector<Vertex> halving;
  /// Base degree of each original vertex.
  std::vector<int> base_degree;
};

/// Subdivides every base edge and joins the halving vertices around each
/// original vertex: one edge for degree 2, a triangle for degree 3. Original
/// vertices keep ids 0..v0-1; halving vertices follow in base edge order.
HalvedGraph halve_and_link(const BaseGraph& base);

/// Grows the triangle (degree 2) or K4 (degree 3) at each original vertex into
/// a B_{ell-1} gadget. Throws Error(kInvalidL) for ell < 6.
PlanarEmbedding expand_vertices(const HalvedGraph& halved, int ell);

struct ConstructionReport {
  PlanarEmbedding embedding;
  std::string family;
  int parameter = 0;
  int ell = 0;
  int base_order = 0;
  int base_size = 0;
  int gadgets_from_degree2 = 0;
  int gadgets_from_degree3 = 0;

  int v = 0;
  int e = 0;
  int min_degree = 0;
  std::map<int, int> face_census;
  std::map<int, int> degree_census;
  bool c_ell_free = false;
  std::optional<CycleWitness> witness;

  int expected_v = 0;  // v0 + e0 + (ell-4) #deg2 + (ell-5) #deg3
  int expected_e = 0;  // (3 ell - 9) v0
  bool counts_match = false;
  bool tight = false;  // ell e = 3(ell-1) v - 6(ell+1)
  bool all_hold() const noexcept { return counts_match && tight && c_ell_free && min_degree >= 3; }
};

/// Runs halve_and_link and expand_vertices on a validated base and re-checks
/// every postcondition on the output.
ConstructionReport construct_from_base(const BaseGraph& base);

enum class ExtremalVariant { kG0, kH0 };

ConstructionReport assemble_extremal(int k, ExtremalVariant variant);

/// Edge x1 x2 (vertices 0, 1) plus the path 2, 3, ..., m-1, each path vertex
/// joined to both x1 and x2. 3m - 6 edges. Throws Error(kInvalidM) for m < 4.
PlanarEmbedding gadget_block(int m);

/// t copies of K5^- glued in a path at outer-triangle corners: 4t+1
/// vertices, 9t edges. Throws Error(kInvalidK) for t < 1.
PlanarEmbedding chain_of_k5minus(int t);

}  // namespace turan
