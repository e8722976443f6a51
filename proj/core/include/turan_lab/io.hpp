#pragma once

#include <string>
#include <vector>

#include "turan_lab/blocks.hpp"
#include "turan_lab/construct.hpp"
#include "turan_lab/cycles.hpp"
#include "turan_lab/discharge.hpp"
#include "turan_lab/oracle.hpp"

namespace turan {

/// Graph JSON: {"n": int, "rotation": [[ccw neighbour ids], ...]}. A document
/// with "edges" ([[u, v], ...]) and no "rotation" is embedded through
/// planarity_test. Throws Error(kParseError) on malformed text and
/// Error(kNotPlanar) for a nonplanar edge list.
PlanarEmbedding parse_graph_json(const std::string& text);

/// Sorted keys, rotation plus the derived edge list; byte-stable.
std::string graph_to_json(const PlanarEmbedding& emb);
std::string graph_to_dot(const PlanarEmbedding& emb);

std::string witness_to_json(const std::optional<CycleWitness>& witness, int length);
std::string report_to_json(const ConstructionReport& report);
std::string decomposition_to_json(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks);
std::string ledger_to_json(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks,
                           const ContributionLedger& ledger);
std::string certificate_to_json(const DischargeCertificate& cert);
std::string bound_to_json(const BoundVerdict& verdict);
std::string enumeration_to_json(const EnumerationResult& result);
std::string propositions_to_json(const PropositionReport& report);

/// One aligned text row: n, ex_P(n, C6), corollary bound, method, witnesses.
std::string enumeration_to_text(const EnumerationResult& result);

}  // namespace turan
