#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"
#include "turan_lab/blocks.hpp"
#include "turan_lab/canonical.hpp"
#include "turan_lab/construct.hpp"
#include "turan_lab/cycles.hpp"
#include "turan_lab/error.hpp"
#include "turan_lab/oracle.hpp"

namespace turan {
namespace {

std::vector<Edge> edge_list(const PlanarEmbedding& emb) {
  std::vector<Edge> out;
  for (int e = 0; e < emb.edge_count(); ++e) out.push_back(emb.edge(e));
  return out;
}

// Naive fixed point: merge two edges whenever they share a 3-face.
std::vector<std::set<Edge>> naive_blocks(const PlanarEmbedding& emb) {
  const int m = emb.edge_count();
  std::vector<int> label(static_cast<std::size_t>(m));
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const FaceWalk& f : emb.faces()) {
      if (f.length() != 3) continue;
      int lo = m;
      for (Dart d : f.darts) lo = std::min(lo, label[PlanarEmbedding::edge_of(d)]);
      for (Dart d : f.darts) {
        int& l = label[PlanarEmbedding::edge_of(d)];
        if (l != lo) {
          for (int& x : label) {
            if (x == l) x = lo;
          }
          changed = true;
        }
      }
    }
  }
  std::map<int, std::set<Edge>> groups;
  for (int e = 0; e < m; ++e) groups[label[e]].insert(emb.edge(e));
  std::vector<std::set<Edge>> out;
  for (auto& [_, s] : groups) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::set<Edge>> as_sets(const std::vector<TriangularBlock>& blocks) {
  std::vector<std::set<Edge>> out;
  for (const auto& b : blocks) out.emplace_back(b.edges.begin(), b.edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Decompose, SevenCycleGivesSevenTrivialBlocks) {
  auto blocks = decompose_triangular_blocks(test::cycle(7));
  ASSERT_EQ(blocks.size(), 7u);
  for (const auto& b : blocks) {
    EXPECT_TRUE(b.trivial());
    EXPECT_EQ(b.type, BlockType::kB2);
  }
}

TEST(Decompose, K4IsOneBlock) {
  auto blocks = decompose_triangular_blocks(test::k4());
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].order(), 4);
  EXPECT_EQ(blocks[0].size(), 6);
  EXPECT_EQ(blocks[0].type, BlockType::kB4a);
}

TEST(Decompose, ChainOfTwoGivesTwoNineEdgeBlocks) {
  auto blocks = decompose_triangular_blocks(chain_of_k5minus(2));
  ASSERT_EQ(blocks.size(), 2u);
  for (const auto& b : blocks) {
    EXPECT_EQ(b.size(), 9);
    EXPECT_EQ(b.type, BlockType::kB5a);
  }
  std::vector<Vertex> shared;
  std::set_intersection(blocks[0].vertices.begin(), blocks[0].vertices.end(), blocks[1].vertices.begin(),
                        blocks[1].vertices.end(), std::back_inserter(shared));
  EXPECT_EQ(shared.size(), 1u);
}

TEST(Decompose, SeparatingTriangleIsNotAFace) {
  // Triangle 0 1 2 with vertex 3 inside on edge 0 1 and vertex 4 outside on
  // edge 1 2. The triangle 0 1 2 bounds no face, so edge 0 2 stays trivial.
  PlanarEmbedding emb = PlanarEmbedding::build({{1, 3, 2}, {4, 2, 3, 0}, {4, 0, 1}, {0, 1}, {2, 1}});
  auto blocks = decompose_triangular_blocks(emb);
  ASSERT_EQ(blocks.size(), 3u);
  EXPECT_EQ(blocks[0].type, BlockType::kB3);
  EXPECT_EQ(blocks[0].edges, (std::vector<Edge>{{0, 1}, {0, 3}, {1, 3}}));
  EXPECT_EQ(blocks[1].type, BlockType::kB2);
  EXPECT_EQ(blocks[1].edges, (std::vector<Edge>{{0, 2}}));
  EXPECT_EQ(blocks[2].type, BlockType::kB3);
}

TEST(Decompose, AgreesWithNaiveFixedPoint) {
  std::vector<PlanarEmbedding> cases = {test::k4(), test::octahedron(), test::k5minus_ring(4), test::b4b_two_four_faces(),
                                        chain_of_k5minus(3), assemble_extremal(1, ExtremalVariant::kG0).embedding,
                                        test::stacked6()};
  for (const auto& emb : cases) EXPECT_EQ(as_sets(decompose_triangular_blocks(emb)), naive_blocks(emb));
}

TEST(Decompose, ClosureIsIdempotentWithinABlock) {
  for (const auto& emb : {test::k5minus_ring(4), test::b4b_two_four_faces(), chain_of_k5minus(3)}) {
    for (const auto& b : decompose_triangular_blocks(emb)) {
      for (const Edge& e : b.edges) EXPECT_EQ(closure_block(emb, e), b.edges);
    }
  }
}

TEST(Decompose, OrderInvarianceUnderRelabelling) {
  // Relabel vertices (which reorders edges) and compare block edge sets.
  std::mt19937_64 rng(3);
  const PlanarEmbedding base = test::b4b_two_four_faces();
  const auto expected = as_sets(decompose_triangular_blocks(base));
  for (int i = 0; i < 1000; ++i) {
    std::vector<Vertex> perm(static_cast<std::size_t>(base.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RotationSpec rot(perm.size());
    RotationSpec src = base.rotation_spec();
    for (Vertex v = 0; v < base.vertex_count(); ++v) {
      // Random cyclic shift of each rotation keeps the embedding.
      auto r = src[v];
      std::rotate(r.begin(), r.begin() + static_cast<long>(rng() % r.size()), r.end());
      for (Vertex& x : r) x = perm[x];
      rot[perm[v]] = r;
    }
    std::vector<Vertex> inverse(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) inverse[perm[j]] = static_cast<Vertex>(j);
    std::vector<std::set<Edge>> back;
    for (const auto& b : decompose_triangular_blocks(PlanarEmbedding::build(rot))) {
      std::set<Edge> s;
      for (const Edge& e : b.edges) s.insert(make_edge(inverse[e.u], inverse[e.v]));
      back.push_back(s);
    }
    std::sort(back.begin(), back.end());
    ASSERT_EQ(back, expected);
  }
}

// Reference shape of each class as an edge list.
struct Shape {
  BlockType type;
  int n;
  std::vector<Edge> edges;
};

std::vector<Shape> class_shapes() {
  return {
      {BlockType::kB5a, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}},
      {BlockType::kB5b, 5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}},
      {BlockType::kB5c, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 3}, {1, 3}}},
      {BlockType::kB5d, 5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {0, 4}, {2, 4}, {1, 4}}},
      {BlockType::kB4a, 4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}},
      {BlockType::kB4b, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}}},
      {BlockType::kB3, 3, {{0, 1}, {1, 2}, {0, 2}}},
  };
}

TEST(Classify, ReferenceShapesEmbedAsSingleBlocks) {
  for (const Shape& s : class_shapes()) {
    Graph g = Graph::from_edges(s.n, s.edges);
    bool matched = false;
    for (const auto& emb : plane_embeddings(g)) {
      auto blocks = decompose_triangular_blocks(emb);
      if (blocks.size() != 1) continue;
      matched = true;
      EXPECT_EQ(blocks[0].type, s.type) << to_string(s.type);
    }
    EXPECT_TRUE(matched) << to_string(s.type);
  }
}

TEST(Classify, DegreeMultisetMatchesIsomorphismOracle) {
  // Every 2-5 vertex triangular block seen in a corpus of plane graphs gets
  // the tag of the reference shape it is isomorphic to.
  std::map<std::string, BlockType> by_code;
  for (const Shape& s : class_shapes()) by_code[canonical_form(Graph::from_edges(s.n, s.edges)).code] = s.type;
  std::vector<PlanarEmbedding> corpus = {test::k5minus_ring(4), test::b4b_two_four_faces(),
                                         assemble_extremal(1, ExtremalVariant::kH0).embedding};
  OracleLimits lim;
  lim.max_order = 6;
  for (const auto& level : c6free_planar_classes(6, lim)) {
    for (const Graph& g : level) {
      if (!is_connected(g)) continue;
      for (auto& emb : plane_embeddings(g)) corpus.push_back(std::move(emb));
    }
  }
  int checked = 0;
  for (const auto& emb : corpus) {
    for (const auto& b : decompose_triangular_blocks(emb)) {
      if (b.trivial() || b.order() > 5) continue;
      std::vector<Edge> local;
      for (const Edge& e : b.edges) {
        auto at = [&](Vertex v) {
          return static_cast<Vertex>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin());
        };
        local.push_back(make_edge(at(e.u), at(e.v)));
      }
      auto it = by_code.find(canonical_form(Graph::from_edges(b.order(), local)).code);
      ASSERT_NE(it, by_code.end());
      EXPECT_EQ(b.type, it->second);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Classify, KFiveMinusAndTrivial) {
  auto c7 = decompose_triangular_blocks(test::cycle(7));
  EXPECT_EQ(classify_block(c7[0], test::cycle(7)), BlockType::kB2);
  PlanarEmbedding k5m = test::k5_minus();
  auto blocks = decompose_triangular_blocks(k5m);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(classify_block(blocks[0], k5m), BlockType::kB5a);
}

TEST(Classify, StackedSixIsOversizedWithSixCycle) {
  PlanarEmbedding s = test::stacked6();
  auto blocks = decompose_triangular_blocks(s);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].type, BlockType::kOversized);
  auto w = find_cycle_of_length(s.graph(), 6);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_valid_cycle(s.graph(), *w));
}

TEST(Classify, UnknownShapeThrows) {
  // A 4-vertex edge set with 4 edges is not one of the shapes.
  PlanarEmbedding c4 = test::cycle(4);
  TriangularBlock fake;
  fake.edges = edge_list(c4);
  fake.vertices = {0, 1, 2, 3};
  EXPECT_THROW(classify_block(fake, c4), Error);
}

TEST(Junctions, ChainOfFour) {
  PlanarEmbedding emb = chain_of_k5minus(4);
  JunctionMap j = junction_map(decompose_triangular_blocks(emb), emb.vertex_count());
  EXPECT_EQ(std::count(j.count.begin(), j.count.end(), 2), 3);
  EXPECT_EQ(std::count(j.count.begin(), j.count.end(), 1), 14);
}

TEST(Junctions, CycleAndK4) {
  PlanarEmbedding c7 = test::cycle(7);
  JunctionMap a = junction_map(decompose_triangular_blocks(c7), 7);
  EXPECT_TRUE(std::all_of(a.count.begin(), a.count.end(), [](int c) { return c == 2; }));
  JunctionMap b = junction_map(decompose_triangular_blocks(test::k4()), 4);
  EXPECT_TRUE(std::all_of(b.count.begin(), b.count.end(), [](int c) { return c == 1; }));
}

TEST(Junctions, CountsSumToBlockOrders) {
  PlanarEmbedding emb = assemble_extremal(1, ExtremalVariant::kG0).embedding;
  auto blocks = decompose_triangular_blocks(emb);
  JunctionMap j = junction_map(blocks, emb.vertex_count());
  int orders = 0;
  for (const auto& b : blocks) orders += b.order();
  EXPECT_EQ(std::accumulate(j.count.begin(), j.count.end(), 0), orders);
}

TEST(Exterior, KFiveMinusInChainOfTwo) {
  PlanarEmbedding emb = chain_of_k5minus(2);
  for (const auto& b : decompose_triangular_blocks(emb)) {
    EXPECT_EQ(b.exterior.exterior_edges.size(), 3u);
    EXPECT_EQ(b.exterior.interior_edges.size(), 6u);
    for (const auto& x : b.exterior.exterior_edges) EXPECT_EQ(x.faces.size(), 1u);
  }
}

TEST(Exterior, K4AloneHasNoExteriorEdges) {
  auto blocks = decompose_triangular_blocks(test::k4());
  EXPECT_TRUE(blocks[0].exterior.exterior_edges.empty());
  EXPECT_EQ(blocks[0].exterior.interior_edges.size(), 6u);
}

TEST(Exterior, TrivialBlockInCycleHasTwoFaces) {
  auto blocks = decompose_triangular_blocks(test::cycle(7));
  ASSERT_EQ(blocks[0].exterior.exterior_edges.size(), 1u);
  EXPECT_EQ(blocks[0].exterior.exterior_edges[0].faces.size(), 2u);
}

TEST(Exterior, PathsRunBetweenJunctions) {
  for (const auto& emb : {test::k5minus_ring(4), test::b4b_two_four_faces(),
                          assemble_extremal(1, ExtremalVariant::kG0).embedding}) {
    auto blocks = decompose_triangular_blocks(emb);
    JunctionMap j = junction_map(blocks, emb.vertex_count());
    for (const auto& b : blocks) {
      std::set<Edge> ext, in;
      for (const auto& x : b.exterior.exterior_edges) ext.insert(x.edge);
      in.insert(b.exterior.interior_edges.begin(), b.exterior.interior_edges.end());
      EXPECT_EQ(ext.size() + in.size(), b.edges.size());
      for (const Edge& e : b.edges) EXPECT_TRUE(ext.count(e) + in.count(e) == 1);
      for (const auto& x : b.exterior.exterior_edges) {
        for (int f : x.faces) EXPECT_NE(emb.faces()[f].length(), 3);
        if (!b.trivial()) EXPECT_EQ(x.faces.size(), 1u);
      }
      std::size_t covered = 0;
      for (const auto& p : b.exterior.exterior_paths) {
        ASSERT_GE(p.size(), 2u);
        covered += p.size() - 1;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) EXPECT_FALSE(j.is_junction(p[i]));
      }
      EXPECT_EQ(covered, ext.size());
    }
  }
}

TEST(Decompose, EdgePartitionOnExtremalGraphs) {
  for (int k = 0; k <= 2; ++k) {
    PlanarEmbedding emb = assemble_extremal(k, ExtremalVariant::kG0).embedding;
    auto blocks = decompose_triangular_blocks(emb);
    int total = 0;
    for (const auto& b : blocks) total += b.size();
    EXPECT_EQ(total, emb.edge_count());
    for (const auto& b : blocks) EXPECT_NE(b.type, BlockType::kOversized);
  }
}

}  // namespace
}  // namespace turan
