#include "turan_lab/io.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "turan_lab/error.hpp"

namespace turan {

using nlohmann::json;

Rational parse_rational(const std::string& text) {
  try {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "bad rational '" + text + "'");
  }
}

namespace {

json edges_json(const PlanarEmbedding& emb) {
  json out = json::array();
  for (int e = 0; e < emb.edge_count(); ++e) out.push_back({emb.edge(e).u, emb.edge(e).v});
  return out;
}

json graph_json(const PlanarEmbedding& emb) {
  return {{"n", emb.vertex_count()}, {"rotation", emb.rotation_spec()}, {"edges", edges_json(emb)}};
}

json witness_json(const std::optional<CycleWitness>& w) { return w ? json(w->vertices) : json(nullptr); }

json census_json(const std::map<int, int>& census) {
  json out = json::object();
  for (auto [k, v] : census) out[std::to_string(k)] = v;
  return out;
}

json exterior_json(const ExteriorStructure& ext) {
  json edges = json::array();
  for (const auto& x : ext.exterior_edges) edges.push_back({{"edge", {x.edge.u, x.edge.v}}, {"faces", x.faces}});
  json interior = json::array();
  for (const Edge& e : ext.interior_edges) interior.push_back({e.u, e.v});
  return {{"exterior_edges", edges}, {"interior_edges", interior}, {"exterior_paths", ext.exterior_paths}};
}

json block_json(const TriangularBlock& b) {
  json edges = json::array();
  for (const Edge& e : b.edges) edges.push_back({e.u, e.v});
  json out = exterior_json(b.exterior);
  out["type"] = std::string(to_string(b.type));
  out["vertices"] = b.vertices;
  out["edges"] = edges;
  return out;
}

json contribution_json(const BlockContribution& c) {
  return {{"n", to_string(c.n)}, {"f", to_string(c.f)}, {"e", c.e}, {"score", to_string(c.score)}};
}

json adjustments_json(const std::vector<FaceAdjustment>& adjustments) {
  json out = json::array();
  for (const auto& a : adjustments) {
    out.push_back({{"face", a.face},
                   {"length", a.length},
                   {"m", a.m},
                   {"effective_length", a.effective_length},
                   {"blocks", a.adjusted_blocks}});
  }
  return out;
}

json row_json(const TableRow& row) {
  return {{"row", row.row}, {"bound", row.bound ? json(to_string(*row.bound)) : json(nullptr)}};
}

json ledger_blocks_json(const std::vector<TriangularBlock>& blocks, const ContributionLedger& ledger,
                        const std::vector<TableRow>& rows) {
  json out = json::array();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    json b = contribution_json(ledger.blocks[i]);
    b["index"] = i;
    b["type"] = std::string(to_string(blocks[i].type));
    b["vertices"] = blocks[i].vertices;
    b["table"] = row_json(rows[i]);
    out.push_back(b);
  }
  return out;
}

json totals_json(const ContributionLedger& ledger) {
  return {{"n", to_string(ledger.total_n)},
          {"f", to_string(ledger.total_f)},
          {"e", ledger.total_e},
          {"score", to_string(ledger.total_score)}};
}

}  // namespace

PlanarEmbedding parse_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("n")) throw Error(ErrorCode::kParseError, "missing \"n\"");
    const int n = doc.at("n").get<int>();
    if (n < 0) throw Error(ErrorCode::kParseError, "negative n");
    if (doc.contains("rotation")) {
      auto rot = doc.at("rotation").get<RotationSpec>();
      if (static_cast<int>(rot.size()) != n) throw Error(ErrorCode::kParseError, "rotation has wrong length");
      return PlanarEmbedding::build(rot);
    }
    if (doc.contains("edges")) {
      std::vector<Edge> edges;
      for (const auto& pair : doc.at("edges")) {
        if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::kParseError, "edge must be [u, v]");
        edges.push_back(make_edge(pair[0].get<int>(), pair[1].get<int>()));
      }
      PlanarityResult p = planarity_test(Graph::from_edges(n, edges));
      if (!p.planar) throw Error(ErrorCode::kNotPlanar, "edge list is not planar");
      return *p.embedding;
    }
    throw Error(ErrorCode::kParseError, "need \"rotation\" or \"edges\"");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string graph_to_json(const PlanarEmbedding& emb) { return graph_json(emb).dump(2) + "\n"; }

std::string graph_to_dot(const PlanarEmbedding& emb) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < emb.vertex_count(); ++v) out << "  " << v << ";\n";
  for (int e = 0; e < emb.edge_count(); ++e) out << "  " << emb.edge(e).u << " -- " << emb.edge(e).v << ";\n";
  out << "}\n";
  return out.str();
}

std::string witness_to_json(const std::optional<CycleWitness>& witness, int length) {
  return json{{"length", length}, {"free", !witness.has_value()}, {"witness", witness_json(witness)}}.dump(2) + "\n";
}

std::string report_to_json(const ConstructionReport& r) {
  json out = {
      {"family", r.family},
      {"parameter", r.parameter},
      {"ell", r.ell},
      {"base_order", r.base_order},
      {"base_size", r.base_size},
      {"gadgets_from_degree2", r.gadgets_from_degree2},
      {"gadgets_from_degree3", r.gadgets_from_degree3},
      {"v", r.v},
      {"e", r.e},
      {"min_degree", r.min_degree},
      {"face_census", census_json(r.face_census)},
      {"degree_census", census_json(r.degree_census)},
      {"c_ell_free", r.c_ell_free},
      {"witness", witness_json(r.witness)},
      {"expected_v", r.expected_v},
      {"expected_e", r.expected_e},
      {"counts_match", r.counts_match},
      {"tight", r.tight},
      {"all_hold", r.all_hold()},
  };
  return out.dump(2) + "\n";
}

std::string decomposition_to_json(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks) {
  json list = json::array();
  for (const auto& b : blocks) list.push_back(block_json(b));
  JunctionMap junctions = junction_map(blocks, emb.vertex_count());
  json out = {{"n", emb.vertex_count()}, {"e", emb.edge_count()}, {"f", emb.face_count()},
              {"blocks", list}, {"junction_counts", junctions.count}};
  return out.dump(2) + "\n";
}

std::string ledger_to_json(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks,
                           const ContributionLedger& ledger) {
  JunctionMap junctions = junction_map(blocks, emb.vertex_count());
  std::vector<TableRow> rows;
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) rows.push_back(table_bound(emb, blocks, junctions, i));
  json out = {{"n", emb.vertex_count()},
              {"e", emb.edge_count()},
              {"f", emb.face_count()},
              {"blocks", ledger_blocks_json(blocks, ledger, rows)},
              {"adjustments", adjustments_json(ledger.adjustments)},
              {"totals", totals_json(ledger)}};
  return out.dump(2) + "\n";
}

std::string certificate_to_json(const DischargeCertificate& cert) {
  json classes = json::array();
  for (const auto& c : cert.classes) {
    classes.push_back({{"blocks", c.blocks}, {"anchor", c.anchor}, {"sum", to_string(c.sum)}});
  }
  json out = {{"n", cert.n},
              {"e", cert.e},
              {"f", cert.f},
              {"blocks", ledger_blocks_json(cert.blocks, cert.ledger, cert.rows)},
              {"adjustments", adjustments_json(cert.ledger.adjustments)},
              {"totals", totals_json(cert.ledger)},
              {"classes", classes},
              {"identities_hold", cert.identities_hold},
              {"classes_nonpositive", cert.classes_nonpositive},
              {"total_nonpositive", cert.total_nonpositive},
              {"edge_bound_holds", cert.edge_bound_holds},
              {"verdict", cert.verdict}};
  return out.dump(2) + "\n";
}

std::string bound_to_json(const BoundVerdict& v) {
  json trace = json::array();
  for (const auto& s : v.trace) trace.push_back({s.vertex, s.degree_at_deletion});
  json rows = json::array();
  for (const auto& r : v.block_rows) {
    rows.push_back({{"order", r.order}, {"size", r.size}, {"value", r.value}, {"required", r.required}, {"holds", r.holds}});
  }
  json out = {{"v", v.v},
              {"e", v.e},
              {"slack", v.slack},
              {"bound_holds", v.bound_holds},
              {"small_exception", v.small_exception},
              {"counterexample", v.counterexample},
              {"peeled_v", v.peeled_v},
              {"peeled_e", v.peeled_e},
              {"peeled_components", v.peeled_components},
              {"trace", trace},
              {"blocks", rows},
              {"size_classes", census_json(v.size_classes)},
              {"table_holds", v.table_holds},
              {"chain_lower", v.chain_lower},
              {"chain_holds", v.chain_holds}};
  return out.dump(2) + "\n";
}

std::string enumeration_to_json(const EnumerationResult& r) {
  json witnesses = json::array();
  for (const Graph& g : r.witnesses) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    witnesses.push_back({{"n", g.order()}, {"edges", edges}});
  }
  json out = {{"n", r.n},
              {"max_edges", r.max_edges},
              {"corollary_bound", r.corollary_bound},
              {"method", r.method},
              {"examined", r.examined},
              {"c6_free", r.c6_free},
              {"planar", r.planar},
              {"witnesses", witnesses}};
  return out.dump(2) + "\n";
}

std::string propositions_to_json(const PropositionReport& report) {
  json list = json::array();
  for (const auto& v : report.violations) list.push_back({{"which", v.which}, {"detail", v.detail}, {"witness", v.witness}});
  return json{{"violations", list}, {"c6_witness", witness_json(report.c6_witness)}}.dump(2) + "\n";
}

std::string enumeration_to_text(const EnumerationResult& r) {
  char line[160];
  std::snprintf(line, sizeof line, "n=%-3d ex_P(n,C6)=%-4d corollary<=%-4d method=%-13s witnesses=%zu\n", r.n,
                r.max_edges, r.corollary_bound, r.method.c_str(), r.witnesses.size());
  return line;
}

}  // namespace turan
