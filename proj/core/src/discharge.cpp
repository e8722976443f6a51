#include "turan_lab/discharge.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "turan_lab/error.hpp"
#include "turan_lab/oracle.hpp"

namespace turan {

namespace {

std::string join(const std::vector<Vertex>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "]";
}

bool edge_on_face(const PlanarEmbedding& emb, Vertex a, Vertex b, int face) {
  Dart d = emb.find_dart(a, b);
  return d != kNoDart && (emb.face_of(d) == face || emb.face_of(PlanarEmbedding::twin(d)) == face);
}

bool face_has_path(const PlanarEmbedding& emb, int face, const std::vector<Vertex>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!edge_on_face(emb, path[i], path[i + 1], face)) return false;
  }
  return true;
}

std::vector<Vertex> exterior_vertices(const TriangularBlock& b) {
  std::set<Vertex> out;
  for (const auto& x : b.exterior.exterior_edges) {
    out.insert(x.edge.u);
    out.insert(x.edge.v);
  }
  return {out.begin(), out.end()};
}

// Middle vertex v2 of the K5^- exterior 2-path v1 v2 v3 (v1, v3 junctions), or
// -1 when the block does not have that shape.
Vertex k5minus_middle(const TriangularBlock& b, const JunctionMap& junctions) {
  if (b.type != BlockType::kB5a) return -1;
  std::vector<Vertex> ext = exterior_vertices(b);
  if (ext.size() != 3) return -1;
  std::vector<Vertex> plain;
  for (Vertex v : ext) {
    if (!junctions.is_junction(v)) plain.push_back(v);
  }
  return plain.size() == 1 ? plain.front() : -1;
}

struct Roles {
  Vertex v1 = -1, v2 = -1, v3 = -1, v4 = -1, v5 = -1;
};

bool on_exterior(const TriangularBlock& b, Vertex v) {
  for (const auto& x : b.exterior.exterior_edges) {
    if (x.edge.u == v || x.edge.v == v) return true;
  }
  return false;
}

// B5d: v1, v3 have block degree 4, v2 degree 2, v4 the exterior degree-3
// vertex and v5 the other. B4b: v2, v4 chord endpoints, v1, v3 degree 2.
Roles roles_of(const TriangularBlock& b, const JunctionMap& junctions) {
  Roles r;
  std::vector<Vertex> deg2, deg3, deg4;
  for (Vertex v : b.vertices) {
    int d = degree_in_block(b, v);
    (d == 2 ? deg2 : d == 3 ? deg3 : deg4).push_back(v);
  }
  if (b.type == BlockType::kB5d) {
    r.v1 = deg4[0];
    r.v3 = deg4[1];
    r.v2 = deg2[0];
    Vertex a = deg3[0], c = deg3[1];
    bool ea = on_exterior(b, a), ec = on_exterior(b, c);
    if (ea != ec) {
      r.v4 = ea ? a : c;
    } else {
      r.v4 = junctions.is_junction(c) && !junctions.is_junction(a) ? c : a;
    }
    r.v5 = r.v4 == a ? c : a;
  } else if (b.type == BlockType::kB4b) {
    r.v1 = deg2[0];
    r.v3 = deg2[1];
    r.v2 = deg3[0];
    r.v4 = deg3[1];
  }
  return r;
}

int count_four_faces_on(const PlanarEmbedding& emb, const TriangularBlock& b, const std::vector<std::vector<Vertex>>& paths) {
  int count = 0;
  for (int f : exterior_four_faces(emb, b)) {
    for (const auto& p : paths) {
      if (face_has_path(emb, f, p)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace

std::vector<Rational> vertex_contributions(const std::vector<TriangularBlock>& blocks, const JunctionMap& junctions) {
  std::vector<Rational> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) {
    Rational sum;
    for (Vertex v : b.vertices) sum += Rational(1, junctions.count[v]);
    out.push_back(sum);
  }
  return out;
}

FaceContributions face_contributions(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks) {
  if (!is_two_connected(emb.graph())) {
    throw Error(ErrorCode::kNotTwoConnected, "face contributions need a 2-connected plane graph");
  }
  const JunctionMap junctions = junction_map(blocks, emb.vertex_count());
  const std::vector<int> owner = edge_owner(emb, blocks);

  FaceContributions out;
  out.per_block.assign(blocks.size(), Rational(0));
  out.per_edge.assign(static_cast<std::size_t>(emb.edge_count()), {Rational(0), Rational(0)});

  std::vector<Vertex> middles(blocks.size(), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) middles[i] = k5minus_middle(blocks[i], junctions);

  const auto& faces = emb.faces();
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const FaceWalk& face = faces[f];
    if (face.length() == 3) {
      out.per_block[owner[PlanarEmbedding::edge_of(face.darts[0])]] += 1;
      continue;
    }
    // Paired edges of each K5^- whose exterior 2-path runs along this face.
    std::set<int> paired;
    FaceAdjustment adj;
    adj.face = f;
    adj.length = face.length();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      Vertex mid = middles[i];
      if (mid < 0) continue;
      std::vector<int> on_face;
      for (const auto& x : blocks[i].exterior.exterior_edges) {
        if ((x.edge.u == mid || x.edge.v == mid) && edge_on_face(emb, x.edge.u, x.edge.v, f)) {
          on_face.push_back(emb.find_edge(x.edge.u, x.edge.v));
        }
      }
      if (on_face.size() != 2) continue;
      adj.adjusted_blocks.push_back(static_cast<int>(i));
      paired.insert(on_face.begin(), on_face.end());
    }
    adj.m = static_cast<int>(adj.adjusted_blocks.size());
    adj.effective_length = adj.length - adj.m;
    const Rational share(1, adj.effective_length);
    for (Dart d : face.darts) {
      int e = PlanarEmbedding::edge_of(d);
      Rational value = paired.count(e) ? share / 2 : share;
      out.per_edge[e][d & 1] = value;
      out.per_block[owner[e]] += value;
    }
    if (adj.m > 0) out.adjustments.push_back(std::move(adj));
  }
  return out;
}

ContributionLedger compute_ledger(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks) {
  const JunctionMap junctions = junction_map(blocks, emb.vertex_count());
  std::vector<Rational> n = vertex_contributions(blocks, junctions);
  FaceContributions f = face_contributions(emb, blocks);
  ContributionLedger ledger;
  ledger.adjustments = std::move(f.adjustments);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    BlockContribution c;
    c.n = n[i];
    c.f = f.per_block[i];
    c.e = blocks[i].size();
    c.score = 7 * c.f + 2 * c.n - 5 * c.e;
    ledger.total_n += c.n;
    ledger.total_f += c.f;
    ledger.total_e += c.e;
    ledger.total_score += c.score;
    ledger.blocks.push_back(c);
  }
  return ledger;
}

Rational block_score(const ContributionLedger& ledger, int block) { return ledger.blocks.at(block).score; }

std::vector<std::vector<Vertex>> designated_paths(const TriangularBlock& block, const JunctionMap& junctions) {
  Roles r = roles_of(block, junctions);
  if (block.type == BlockType::kB5d) return {{r.v1, r.v4, r.v3}};
  if (block.type == BlockType::kB4b) return {{r.v1, r.v2, r.v3}, {r.v1, r.v4, r.v3}};
  return {};
}

std::vector<int> exterior_four_faces(const PlanarEmbedding& emb, const TriangularBlock& block) {
  std::set<int> out;
  for (const auto& x : block.exterior.exterior_edges) {
    for (int f : x.faces) {
      if (emb.faces()[f].length() == 4) out.insert(f);
    }
  }
  return {out.begin(), out.end()};
}

TableRow table_bound(const PlanarEmbedding& emb, const std::vector<TriangularBlock>& blocks,
                     const JunctionMap& junctions, int block) {
  const TriangularBlock& b = blocks.at(block);
  auto junction_total = [&] {
    int c = 0;
    for (Vertex v : b.vertices) c += junctions.is_junction(v);
    return c;
  };
  switch (b.type) {
    case BlockType::kB5a: {
      int j = junction_total();
      if (j >= 3) return {"B5a:3-junctions", Rational(0)};
      if (j == 2) return {"B5a:2-junctions", Rational(0)};
      return {};
    }
    case BlockType::kB5b: return {"B5b", Rational(0)};
    case BlockType::kB5c: return {"B5c", Rational(-1)};
    case BlockType::kB4a: return {"B4a", Rational(0)};
    case BlockType::kB5d: {
      Roles r = roles_of(b, junctions);
      if (junctions.is_junction(r.v4)) return {"B5d:v4-junction", Rational(0)};
      int ends = junctions.is_junction(r.v1) + junctions.is_junction(r.v3);
      if (ends == 1) return {"B5d:one-of-v1v3-junction", Rational(0)};
      if (ends == 0) return {};
      if (count_four_faces_on(emb, b, designated_paths(b, junctions)) > 0) return {"B5d:4-face", Rational(1, 2)};
      return {"B5d:no-4-face", Rational(-1)};
    }
    case BlockType::kB4b: {
      Roles r = roles_of(b, junctions);
      if (junctions.is_junction(r.v2) || junctions.is_junction(r.v4)) return {"B4b:chord-junction", Rational(-1, 2)};
      int fours = count_four_faces_on(emb, b, designated_paths(b, junctions));
      if (fours == 0) return {"B4b:no-4-face", Rational(-1)};
      if (fours == 1) return {"B4b:one-4-face", Rational(1, 6)};
      return {"B4b:two-4-faces", Rational(4, 3)};
    }
    case BlockType::kB3: {
      bool all_two = std::all_of(b.vertices.begin(), b.vertices.end(), [&](Vertex v) { return junctions.count[v] == 2; });
      if (all_two) return {"B3:all-count-2", Rational(-5, 4)};
      return {"B3:other", Rational(-1, 12)};
    }
    case BlockType::kB2: {
      int a = junctions.count[b.vertices[0]];
      int c = junctions.count[b.vertices[1]];
      if (a < 2 || c < 2) return {};
      if (a == 2 && c == 2) return {"B2:2-2", Rational(-1, 4)};
      if (a == 2 || c == 2) return {"B2:2-3+", Rational(-7, 12)};
      return {"B2:3+-3+", Rational(-31, 60)};
    }
    case BlockType::kOversized: return {};
  }
  return {};
}

void require_hypotheses(const PlanarEmbedding& emb, bool check_c6) {
  const Graph g = emb.graph();
  if (g.order() < 6) throw Error(ErrorCode::kHypothesisViolated, "n = " + std::to_string(g.order()) + " < 6");
  if (!is_two_connected(g)) throw Error(ErrorCode::kHypothesisViolated, "graph is not 2-connected");
  if (g.min_degree() < 3) {
    throw Error(ErrorCode::kHypothesisViolated, "minimum degree " + std::to_string(g.min_degree()) + " < 3");
  }
  if (check_c6) {
    if (auto w = find_cycle_of_length(g, 6)) {
      throw Error(ErrorCode::kHypothesisViolated, "contains C6 " + join(w->vertices));
    }
  }
}

DischargeCertificate partition_and_certify(const PlanarEmbedding& emb) {
  require_hypotheses(emb);
  DischargeCertificate cert;
  cert.n = emb.vertex_count();
  cert.e = emb.edge_count();
  cert.f = emb.face_count();
  cert.blocks = decompose_triangular_blocks(emb);
  cert.ledger = compute_ledger(emb, cert.blocks);
  const JunctionMap junctions = junction_map(cert.blocks, cert.n);
  for (int i = 0; i < static_cast<int>(cert.blocks.size()); ++i) {
    cert.rows.push_back(table_bound(emb, cert.blocks, junctions, i));
  }

  const std::vector<int> owner = edge_owner(emb, cert.blocks);
  const int count = static_cast<int>(cert.blocks.size());
  std::vector<int> claimed(static_cast<std::size_t>(count), -1);
  for (int i = 0; i < count; ++i) {
    if (cert.ledger.blocks[i].score <= Rational(0)) continue;
    if (claimed[i] >= 0) {
      throw Error(ErrorCode::kGroupingFailed, "positive block " + std::to_string(i) + " already grouped");
    }
    claimed[i] = i;
    PartitionClass cls;
    cls.anchor = i;
    cls.blocks.push_back(i);
    const TriangularBlock& b = cert.blocks[i];
    for (int f : exterior_four_faces(emb, b)) {
      for (Dart d : emb.faces()[f].darts) {
        int e = PlanarEmbedding::edge_of(d);
        int other = owner[e];
        if (other == i) continue;
        if (!cert.blocks[other].trivial()) {
          throw Error(ErrorCode::kGroupingFailed, "4-face " + join(face_vertices(emb, emb.faces()[f])) +
                                                      " of block " + std::to_string(i) + " has a nontrivial edge");
        }
        if (claimed[other] >= 0) {
          throw Error(ErrorCode::kGroupingFailed,
                      "trivial block " + std::to_string(other) + " claimed by two positive blocks");
        }
        claimed[other] = i;
        cls.blocks.push_back(other);
      }
    }
    std::sort(cls.blocks.begin() + 1, cls.blocks.end());
    cert.classes.push_back(std::move(cls));
  }
  for (int i = 0; i < count; ++i) {
    if (claimed[i] < 0) cert.classes.push_back({{i}, -1, Rational(0)});
  }
  std::sort(cert.classes.begin(), cert.classes.end(),
            [](const PartitionClass& a, const PartitionClass& b) { return a.blocks.front() < b.blocks.front(); });

  cert.classes_nonpositive = true;
  for (auto& cls : cert.classes) {
    cls.sum = 0;
    for (int b : cls.blocks) cls.sum += cert.ledger.blocks[b].score;
    if (cls.sum > Rational(0)) cert.classes_nonpositive = false;
  }
  cert.identities_hold = cert.ledger.total_n == Rational(cert.n) && cert.ledger.total_f == Rational(cert.f) && cert.ledger.total_e == cert.e;
  cert.total_nonpositive = cert.ledger.total_score <= Rational(0);
  cert.edge_bound_holds = 2 * cert.e <= 5 * cert.n - 14;
  cert.verdict = cert.identities_hold && cert.classes_nonpositive && cert.total_nonpositive && cert.edge_bound_holds;
  return cert;
}

PropositionReport check_face_propositions(const PlanarEmbedding& emb, PropositionMode mode) {
  require_hypotheses(emb, mode == PropositionMode::kStrict);
  const auto blocks = decompose_triangular_blocks(emb);
  const JunctionMap junctions = junction_map(blocks, emb.vertex_count());
  const std::vector<int> owner = edge_owner(emb, blocks);
  const auto& faces = emb.faces();
  PropositionReport report;

  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    const TriangularBlock& b = blocks[i];
    if (b.trivial()) continue;
    std::set<int> ext_faces;
    for (const auto& x : b.exterior.exterior_edges) ext_faces.insert(x.faces.begin(), x.faces.end());
    for (int f : ext_faces) {
      const int len = faces[f].length();
      const std::vector<Vertex> fv = face_vertices(emb, faces[f]);
      const std::string tag = std::string(to_string(b.type)) + " block " + std::to_string(i);
      if (len == 5) report.violations.push_back({"i", tag + " has an exterior 5-face", fv});
      if (len != 4) continue;
      switch (b.type) {
        case BlockType::kB5a:
        case BlockType::kB5b:
        case BlockType::kB5c:
        case BlockType::kB4a:
          report.violations.push_back({"ii", tag + " has an exterior 4-face", fv});
          break;
        case BlockType::kB5d:
        case BlockType::kB4b: {
          bool shares = false;
          for (const auto& p : designated_paths(b, junctions)) shares = shares || face_has_path(emb, f, p);
          if (!shares) report.violations.push_back({"iii", tag + " 4-face misses the designated 2-path", fv});
          for (Dart d : faces[f].darts) {
            int other = owner[PlanarEmbedding::edge_of(d)];
            if (other != i && !blocks[other].trivial()) {
              report.violations.push_back({"iii", tag + " 4-face has an edge in nontrivial block " +
                                                      std::to_string(other), fv});
            }
          }
          break;
        }
        default:
          break;
      }
    }
  }
  for (int e = 0; e < emb.edge_count(); ++e) {
    int f0 = emb.face_of(2 * e), f1 = emb.face_of(2 * e + 1);
    if (f0 != f1 && faces[f0].length() == 4 && faces[f1].length() == 4) {
      Edge ed = emb.edge(e);
      report.violations.push_back({"iv", "4-faces " + std::to_string(f0) + " and " + std::to_string(f1) +
                                             " share edge " + join({ed.u, ed.v}), {ed.u, ed.v}});
    }
  }
  if (!report.violations.empty()) report.c6_witness = find_cycle_of_length(emb.graph(), 6);
  return report;
}

void require_face_propositions(const PlanarEmbedding& emb, PropositionMode mode) {
  PropositionReport report = check_face_propositions(emb, mode);
  if (report.violations.empty()) return;
  const auto& v = report.violations.front();
  std::string msg = "(" + v.which + ") " + v.detail + " at " + join(v.witness);
  if (report.c6_witness) msg += "; C6 " + join(report.c6_witness->vertices);
  throw Error(ErrorCode::kPropositionViolated, msg);
}

BoundVerdict certify_bound(const Graph& g, const PlanarEmbedding* emb) {
  if (emb == nullptr && !planarity_test(g).planar) throw Error(ErrorCode::kNotPlanar, "graph is not planar");
  if (auto w = find_cycle_of_length(g, 6)) throw Error(ErrorCode::kNotC6Free, "C6 " + join(w->vertices));

  BoundVerdict out;
  out.v = g.order();
  out.e = static_cast<int>(g.size());
  out.slack = 5 * out.v - 2 * out.e;
  out.bound_holds = out.slack >= 14;
  out.small_exception = !out.bound_holds && out.v <= 17;
  out.counterexample = !out.bound_holds && out.v > 17;

  PeelResult peeled = peel_min_degree(g, 3);
  out.trace = peeled.trace;
  out.peeled_v = peeled.subgraph.order();
  out.peeled_e = static_cast<int>(peeled.subgraph.size());
  int components = 0;
  connected_components(peeled.subgraph, &components);
  out.peeled_components = components;

  BlockCutDecomposition bc = biconnected_blocks(peeled.subgraph);
  out.size_classes = bc.size_classes();
  out.table_holds = true;
  for (const auto& b : bc.blocks) {
    static constexpr int kRequired[] = {0, 0, 3, 4, 3, 2, 9};
    PeeledBlockRow row;
    row.order = b.order();
    row.size = b.size();
    row.value = 5 * row.order - 2 * row.size - 5;
    row.required = kRequired[std::min(row.order, 6)];
    row.holds = row.value >= row.required;
    out.table_holds = out.table_holds && row.holds;
    out.block_rows.push_back(row);
  }
  auto cls = [&](int k) {
    auto it = out.size_classes.find(k);
    return it == out.size_classes.end() ? 0 : it->second;
  };
  out.chain_lower = 9 * cls(6) + 2 * cls(5) + 3 * cls(4) + 4 * cls(3) + 3 * cls(2) + 5 * out.peeled_components +
                    (out.v - out.peeled_v);
  out.chain_holds = out.chain_lower <= out.slack;
  return out;
}

}  // namespace turan
