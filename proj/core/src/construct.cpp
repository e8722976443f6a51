#include "turan_lab/construct.hpp"

#include <string>

#include "builder.hpp"
#include "turan_lab/error.hpp"

namespace turan {

using detail::RotationBuilder;

std::string_view to_string(BaseFamily family) noexcept {
  switch (family) {
    case BaseFamily::kG0: return "g0";
    case BaseFamily::kH0: return "h0";
    case BaseFamily::kCycle: return "cycle";
    case BaseFamily::kUserSupplied: return "user";
  }
  return "?";
}

BaseGraph BaseGraph::validate(PlanarEmbedding emb, BaseFamily family, int parameter) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kUnvalidatedBase, why); };
  if (emb.edge_count() == 0) fail("base has no edges");
  if (!is_two_connected(emb.graph())) fail("base is not 2-connected");
  const int len = emb.faces().front().length();
  for (const FaceWalk& f : emb.faces()) {
    if (f.length() != len) fail("face lengths differ (" + std::to_string(len) + " vs " + std::to_string(f.length()) + ")");
  }
  if (len < 7) fail("face length " + std::to_string(len) + " < 7");

  BaseGraph b;
  b.family_ = family;
  b.parameter_ = parameter;
  b.ell_ = len - 1;
  for (Vertex v = 0; v < emb.vertex_count(); ++v) {
    int d = emb.degree(v);
    if (d == 2) {
      ++b.deg2_;
    } else if (d == 3) {
      ++b.deg3_;
    } else {
      fail("vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    }
  }
  const int v = emb.vertex_count(), e = emb.edge_count(), k = parameter;
  if (family == BaseFamily::kG0 && (len != 7 || v != 10 * k + 7 || e != 14 * k + 7)) fail("G0 formulas fail");
  if (family == BaseFamily::kH0 && (len != 7 || v != 10 * k + 2 || e != 14 * k)) fail("H0 formulas fail");
  b.emb_ = std::move(emb);
  return b;
}

namespace {

RotationSpec cycle_rotation(int length) {
  RotationSpec rot(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) rot[i] = {(i + length - 1) % length, (i + 1) % length};
  return rot;
}

// Grows a C7 by 7-face ears glued onto the outer face. `outer` is the vertex
// sequence of the outer walk (walk order); each ear with p inner vertices
// spans 6-p outer edges between two degree-2 vertices far enough apart that
// no shorter cycle appears, and closes a new 7-face.
class HeptagonalGrowth {
 public:
  HeptagonalGrowth() : b_(cycle_rotation(7)) {
    for (int i = 0; i < 7; ++i) outer_.push_back(i);
  }

  void add_ear(int inner) {
    const int span = 6 - inner;
    const int len = static_cast<int>(outer_.size());
    for (int i = 0; i < len; ++i) {
      Vertex a = outer_[i];
      Vertex b = outer_[(i + span) % len];
      if (b_.degree(a) != 2 || b_.degree(b) != 2) continue;
      if (b_.bfs_distances(a)[b] < span) continue;
      Vertex before_a = outer_[(i + len - 1) % len];
      Vertex before_b = outer_[(i + span - 1) % len];
      std::vector<Vertex> path = b_.add_ear(a, before_a, b, before_b, inner);
      std::vector<Vertex> next;
      for (int j = 0; j <= len - span; ++j) next.push_back(outer_[(i + span + j) % len]);
      next.insert(next.end(), path.begin(), path.end());
      outer_ = std::move(next);
      return;
    }
    throw Error(ErrorCode::kInvalidK, "no admissible ear position on the outer face");
  }

  // One column: four ears with 3, 2, 3, 2 inner vertices (10 vertices, 14 edges).
  void add_column() {
    for (int p : {3, 2, 3, 2}) add_ear(p);
  }

  PlanarEmbedding finish() const { return b_.finish(); }

 private:
  RotationBuilder b_;
  std::vector<Vertex> outer_;
};

}  // namespace

BaseGraph heptagonal_base(int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidK, "heptagonal_base needs k >= 0");
  HeptagonalGrowth growth;
  for (int i = 0; i < k; ++i) growth.add_column();
  return BaseGraph::validate(growth.finish(), BaseFamily::kG0, k);
}

BaseGraph reduced_base(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidK, "reduced_base needs k >= 1");
  HeptagonalGrowth growth;
  for (int i = 0; i + 1 < k; ++i) growth.add_column();
  growth.add_ear(3);
  growth.add_ear(2);
  return BaseGraph::validate(growth.finish(), BaseFamily::kH0, k);
}

BaseGraph cycle_base(int ell) {
  if (ell < 6) throw Error(ErrorCode::kInvalidL, "cycle_base needs ell >= 6");
  return BaseGraph::validate(PlanarEmbedding::build(cycle_rotation(ell + 1)), BaseFamily::kCycle, ell);
}

HalvedGraph halve_and_link(const BaseGraph& base) {
  const PlanarEmbedding& emb = base.embedding();
  RotationBuilder b(emb.rotation_spec());
  HalvedGraph out;
  out.base_order = emb.vertex_count();
  for (int e = 0; e < emb.edge_count(); ++e) {
    Edge ed = emb.edge(e);
    out.halving.push_back(b.subdivide(ed.u, ed.v));
  }
  for (Vertex u = 0; u < out.base_order; ++u) {
    const std::vector<Vertex> rot = b.rotation(u);
    out.base_degree.push_back(static_cast<int>(rot.size()));
    const std::size_t corners = rot.size() == 2 ? 1 : rot.size();
    for (std::size_t i = 0; i < corners; ++i) b.cut_corner(u, rot[i], rot[(i + 1) % rot.size()]);
  }
  out.embedding = b.finish();
  return out;
}

PlanarEmbedding expand_vertices(const HalvedGraph& halved, int ell) {
  if (ell < 6) throw Error(ErrorCode::kInvalidL, "expand_vertices needs ell >= 6");
  RotationBuilder b(halved.embedding.rotation_spec());
  for (Vertex u = 0; u < halved.base_order; ++u) {
    const int degree = halved.base_degree[u];
    const Vertex h1 = b.rotation(u)[0];
    const Vertex h2 = b.rotation(u)[1];
    // The corner triangle h1 -> u -> h2 receives the new path vertices.
    const int extra = degree == 2 ? ell - 4 : ell - 5;
    Vertex apex = u;
    for (int i = 0; i < extra; ++i) apex = b.add_vertex_in_face({h1, apex, h2});
  }
  return b.finish();
}

ConstructionReport construct_from_base(const BaseGraph& base) {
  const int ell = base.ell();
  ConstructionReport r;
  r.family = std::string(to_string(base.family()));
  r.parameter = base.parameter();
  r.ell = ell;
  r.base_order = base.embedding().vertex_count();
  r.base_size = base.embedding().edge_count();
  r.gadgets_from_degree2 = base.degree2_count();
  r.gadgets_from_degree3 = base.degree3_count();
  r.embedding = expand_vertices(halve_and_link(base), ell);

  const Graph g = r.embedding.graph();
  r.v = g.order();
  r.e = static_cast<int>(g.size());
  DegreeProfile profile = degree_profile(r.embedding);
  r.min_degree = profile.min_degree;
  r.degree_census = profile.census;
  r.face_census = face_census(r.embedding);
  FreenessVerdict fv = is_c_l_free(g, ell);
  r.c_ell_free = fv.free;
  r.witness = fv.witness;

  r.expected_v = r.base_order + r.base_size + (ell - 4) * r.gadgets_from_degree2 + (ell - 5) * r.gadgets_from_degree3;
  r.expected_e = (3 * ell - 9) * r.base_order;
  r.counts_match = r.v == r.expected_v && r.e == r.expected_e;
  r.tight = ell * r.e == 3 * (ell - 1) * r.v - 6 * (ell + 1);
  return r;
}

ConstructionReport assemble_extremal(int k, ExtremalVariant variant) {
  return construct_from_base(variant == ExtremalVariant::kG0 ? heptagonal_base(k) : reduced_base(k));
}

PlanarEmbedding gadget_block(int m) {
  if (m < 4) throw Error(ErrorCode::kInvalidM, "gadget_block needs m >= 4, got " + std::to_string(m));
  RotationBuilder b({{1, 2}, {2, 0}, {0, 1}});
  Vertex apex = 2;
  for (int i = 3; i < m; ++i) apex = b.add_vertex_in_face({0, apex, 1});
  return b.finish();
}

PlanarEmbedding chain_of_k5minus(int t) {
  if (t < 1) throw Error(ErrorCode::kInvalidK, "chain_of_k5minus needs t >= 1");
  // K5 minus w2w4; local order w1..w5. Every face is a triangle and
  // w1 -> w3 -> w2 is the one used for gluing.
  static const std::vector<std::vector<int>> kTemplate = {
      {2, 3, 4, 1},  // w1
      {0, 4, 2},     // w2
      {1, 4, 3, 0},  // w3
      {4, 0, 2},     // w4
      {1, 0, 3, 2},  // w5
  };
  auto global = [](int copy, int local) {
    static const int kOffset[] = {0, 1, 4, 2, 3};
    return 4 * copy + kOffset[local];
  };
  RotationSpec rot(static_cast<std::size_t>(4 * t + 1));
  for (int c = 0; c < t; ++c) {
    for (int w = 0; w < 5; ++w) {
      auto& target = rot[global(c, w)];
      // w3 of copy c is w1 of copy c+1; its rotation is copy c's list followed
      // by copy c+1's, which splits the shared vertex at the w1-w2 corner.
      for (int x : kTemplate[w]) target.push_back(global(c, x));
    }
  }
  return PlanarEmbedding::build(rot);
}

}  // namespace turan
