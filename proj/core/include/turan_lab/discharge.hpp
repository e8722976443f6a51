#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turan_lab/blocks.hpp"
#include "turan_lab/connectivity.hpp"
#include "turan_lab/cycles.hpp"
#include "turan_lab/rational.hpp"

namespace turan {

/// A K5^- block whose exterior 2-path v1 v2 v3 (v1, v3 junctions, v2 not)
/// runs along face F shortens F by one in the face-contribution rule.
struct FaceAdjustment {
  int face = 0;
  int length = 0;  // |C_F|
  int m = 0;
  int effective_length = 0;           // |C_F| - m
  std::vector<int> adjusted_blocks;  // block indices, increasing
};

struct BlockContribution {
  Rational n;
  Rational f;
  int e = 0;
  Rational score;  // 7f + 2n - 5e
};

struct ContributionLedger {
  std::vector<BlockContribution> blocks;
  std::vector<FaceAdjustment> adjustments;
  Rational total_n;
  Rational total_f;
  int total_e = 0;
  Rational total_score;
};

std::vector<Rational> vertex_contributions(const std::vector<TriangularBlock>& blocks, const JunctionMap& junctions);

struct FaceContributions {
  std::vector<Rational> per_block;
  std::vector<FaceAdjustment> adjustments;
  /// per_edge[edge id][side] = f_F(e) for the face on dart 2e + side (0 for triangles).
  std::vector<std::array<Rational, 2>> per_edge;
};

/// Throws Error(kNotTwoConnected) unless the embedded graph is 2-connected.
FaceContributions face_contributions(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks);

ContributionLedger compute_ledger(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks);

Rational block_score(const ContributionLedger& ledger, int block);

/// The matching row of the block-score tables and its upper bound. `row` is
/// empty when the block is in no tabulated configuration (only possible off
/// hypothesis).
struct TableRow {
  std::string row;
  std::optional<Rational> bound;
};

TableRow table_bound(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks,
                     const JunctionMap& junctions, int block);

/// Designated 2-path (v1, x, v3) of a B5d or B4b block along which a 4-face may
/// attach; x = v4 for B5d, either chord endpoint for B4b (returned twice).
std::vector<std::vector<Vertex>> designated_paths(const TriangularBlock& block, const JunctionMap& junctions);

/// Ids of length-4 faces touching an edge of the block, increasing.
std::vector<int> exterior_four_faces(const PlanarEmbedding& emb, const TriangularBlock& block);

struct PartitionClass {
  std::vector<int> blocks;  // increasing; the anchor block first when grouped
  int anchor = -1;          // positive-score block that seeded the class, or -1
  Rational sum;
};

struct DischargeCertificate {
  int n = 0;
  int e = 0;
  int f = 0;
  std::vector<TriangularBlock> blocks;
  ContributionLedger ledger;
  std::vector<TableRow> rows;  // per block
  std::vector<PartitionClass> classes;
  bool identities_hold = false;  // sum n = v, sum f = f, sum e = e
  bool classes_nonpositive = false;
  bool total_nonpositive = false;
  bool edge_bound_holds = false;  // 2e <= 5n - 14
  bool verdict = false;
};

/// Eager hypothesis check: 2-connected, minimum degree >= 3, C6-free, n >= 6.
/// Throws Error(kHypothesisViolated) naming the first failure.
void require_hypotheses(const PlanarEmbedding& emb, bool check_c6 = true);

/// Throws kHypothesisViolated on non-conforming input and kGroupingFailed if a
/// positive block's 4-faces are not bordered by unclaimed trivial blocks.
DischargeCertificate partition_and_certify(const PlanarEmbedding& emb);

struct PropositionViolation {
  std::string which;  // "i", "ii", "iii" or "iv"
  std::string detail;
  std::vector<Vertex> witness;  // face or path vertices
};

struct PropositionReport {
  std::vector<PropositionViolation> violations;
  std::optional<CycleWitness> c6_witness;  // cross-check whenever violations exist
};

enum class PropositionMode {
  kStrict,      // full hypothesis precheck
  kStructural,  // skips the C6 precheck so that hidden C6 inputs reach the checks
};

PropositionReport check_face_propositions(const PlanarEmbedding& emb, PropositionMode mode = PropositionMode::kStrict);

/// Same as check_face_propositions but throws Error(kPropositionViolated) on
/// the first violation.
void require_face_propositions(const PlanarEmbedding& emb, PropositionMode mode = PropositionMode::kStrict);

struct PeeledBlockRow {
  int order = 0;
  int size = 0;
  int value = 0;     // 5n - 2e - 5
  int required = 0;  // 9, 2, 3, 4, 3 for order >= 6, 5, 4, 3, 2
  bool holds = false;
};

struct BoundVerdict {
  int v = 0;
  int e = 0;
  int slack = 0;  // 5v - 2e
  bool bound_holds = false;  // slack >= 14, i.e. e <= 5v/2 - 7
  bool small_exception = false;  // bound fails and v <= 17
  bool counterexample = false;   // bound fails and v > 17
  int peeled_v = 0;
  int peeled_e = 0;
  int peeled_components = 0;
  std::vector<PeelStep> trace;
  std::vector<PeeledBlockRow> block_rows;
  std::map<int, int> size_classes;  // b2..b6
  bool table_holds = false;
  int chain_lower = 0;  // 9b6 + 2b5 + 3b4 + 4b3 + 3b2 + 5c' + (v - v')
  bool chain_holds = false;
};

/// Throws Error(kNotC6Free) with the witness in the message, or
/// Error(kNotPlanar) when no embedding is given and the graph is nonplanar.
BoundVerdict certify_bound(const Graph& g, const PlanarEmbedding* emb = nullptr);

}  // namespace turan
