#pragma once

#include <string>
#include <vector>

#include "turan_lab/embedding.hpp"

namespace turan {

/// Isomorphism-invariant labelling: two graphs are isomorphic iff their codes
/// are equal. order[i] is the input vertex that receives label i.
struct CanonicalForm {
  std::vector<Vertex> order;
  std::string code;  // upper-triangle adjacency bits of the relabelled graph
};

/// Colour refinement plus individualisation, branching on every vertex of the
/// first non-singleton cell except twins of vertices already tried.
CanonicalForm canonical_form(const Graph& g);

/// Graph with vertex order[i] renamed to i.
Graph relabel(const Graph& g, const std::vector<Vertex>& order);

/// Code of a connected plane embedding, equal for two embeddings iff they are
/// related by a vertex bijection preserving rotations, possibly all reversed
/// (mirror images compare equal).
std::vector<int> embedding_code(const PlanarEmbedding& emb);

/// Embedding relabelled by the smallest BFS code over start darts in the
/// orientation of `emb` (no mirroring). Two embeddings related by an
/// orientation-preserving bijection map to identical rotation specs.
RotationSpec canonical_rotation(const PlanarEmbedding& emb);

}  // namespace turan
