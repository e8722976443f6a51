#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "turan_lab/embedding.hpp"
#include "turan_lab/graph.hpp"

namespace turan::test {

PlanarEmbedding triangle();
PlanarEmbedding cycle(int n);
PlanarEmbedding k4();
PlanarEmbedding octahedron();
PlanarEmbedding k5_minus();
RotationSpec k5_rotation();

/// K4 plus a pendant vertex 4 hung from vertex 0.
PlanarEmbedding k4_plus_pendant();

/// Stacked triangulation on 6 vertices (K4 with two more vertices stacked in
/// faces); its single triangular block has 6 vertices.
PlanarEmbedding stacked6();

/// Ring of t K5^- copies; consecutive copies joined by one edge. For t >= 4
/// it is 2-connected, min degree 3 and C6-free, with trivial blocks whose
/// endpoints lie in exactly two triangular blocks.
PlanarEmbedding k5minus_ring(int t);

/// 11 vertices: a 4-cycle 0-1-2-3 with chord 1-3, vertices 4 and 5 each
/// adjacent to 0 and 2, and a 5-vertex gadget hung from 4 and 5. Both exterior
/// faces of the 4-vertex block are 4-faces.
PlanarEmbedding b4b_two_four_faces();

/// 13 vertices containing a B5d block whose 2-path 0-1-2 lies on the 4-face
/// 0 1 2 5; satisfies every discharging hypothesis.
PlanarEmbedding b5d_four_face();

/// Two K5^- blocks sharing the 11-edge face of a 9-cycle ring: each block's
/// exterior 2-path runs along that face, so its effective length is 9.
PlanarEmbedding shared_eleven_face();

Graph k33();
Graph k5();

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);
/// Random graph with exactly m edges.
Graph random_graph_edges(int n, int m, std::mt19937_64& rng);

/// Brute-force "is there a k-cycle": tries every ordered vertex sequence.
bool brute_force_has_cycle(const Graph& g, int k);

/// Brute-force planarity for small graphs: tries every rotation system of
/// each component and looks for Euler characteristic 2.
bool brute_force_planar(const Graph& g);

/// Same graph with vertex i renamed perm[i].
Graph permuted(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace turan::test
