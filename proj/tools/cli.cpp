#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "turan_lab/canonical.hpp"
#include "turan_lab/error.hpp"
#include "turan_lab/io.hpp"

namespace turan::cli {

namespace {

using nlohmann::json;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path.string());
  out << text;
}

// Writes to --output when given, else to the stream.
void emit(std::ostream& out, const std::string& output, const std::string& text) {
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
}

PlanarEmbedding load(const std::string& path) { return parse_graph_json(read_file(path)); }

struct Options {
  std::string file;
  std::string output;
  std::string format;
  std::string family;
  std::string base;
  std::string out_dir;
  std::string path = "subsets";
  int k = 1;
  int t = 4;
  int ell = 6;
  int n = 0;
  int max_order = 0;
  unsigned workers = 0;
  bool structural = false;
  bool canonical = false;
};

json chain_report(const PlanarEmbedding& emb, int t) {
  const Graph g = emb.graph();
  auto witness = find_cycle_of_length(g, 6);
  return {{"family", "chain"},
          {"parameter", t},
          {"v", g.order()},
          {"e", g.size()},
          {"expected_v", 4 * t + 1},
          {"expected_e", 9 * t},
          {"min_degree", g.min_degree()},
          {"c_ell_free", !witness},
          {"ell", 6},
          {"witness", witness ? json(witness->vertices) : json(nullptr)}};
}

int cmd_construct(const Options& o, std::ostream& out) {
  PlanarEmbedding emb;
  std::string report;
  bool ok = false;
  if (o.family == "chain") {
    emb = chain_of_k5minus(o.t);
    json r = chain_report(emb, o.t);
    ok = r["c_ell_free"].get<bool>() && r["v"] == r["expected_v"] && r["e"] == r["expected_e"];
    report = r.dump(2) + "\n";
  } else {
    ConstructionReport r;
    if (o.family == "g0" || o.family == "h0") {
      if (o.ell != 6) throw Error(ErrorCode::kInvalidL, "g0/h0 bases have 7-faces, so ell must be 6");
      r = assemble_extremal(o.k, o.family == "g0" ? ExtremalVariant::kG0 : ExtremalVariant::kH0);
    } else if (!o.base.empty()) {
      r = construct_from_base(BaseGraph::validate(load(o.base), BaseFamily::kUserSupplied));
      if (r.ell != o.ell) throw Error(ErrorCode::kInvalidL, "base faces have length " + std::to_string(r.ell + 1));
    } else {
      r = construct_from_base(cycle_base(o.ell));
    }
    emb = r.embedding;
    ok = r.all_hold();
    report = report_to_json(r);
  }
  const std::string graph = o.format == "dot" ? graph_to_dot(emb) : graph_to_json(emb);
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    write_file(std::filesystem::path(o.out_dir) / (o.format == "dot" ? "graph.dot" : "graph.json"), graph);
    write_file(std::filesystem::path(o.out_dir) / "report.json", report);
    out << report;
  } else {
    json both = {{"graph", json::parse(graph_to_json(emb))}, {"report", json::parse(report)}};
    emit(out, o.output, o.format == "dot" ? graph : both.dump(2) + "\n");
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Graph g = load(o.file).graph();
  FreenessVerdict v = is_c_l_free(g, o.ell);
  if (o.format == "json") {
    emit(out, o.output, witness_to_json(v.witness, o.ell));
  } else {
    std::string text = "C" + std::to_string(o.ell) + "-free: " + (v.free ? "true" : "false") + "\n";
    if (v.witness) {
      text += "witness:";
      for (Vertex x : v.witness->vertices) text += " " + std::to_string(x);
      text += "\n";
    }
    emit(out, o.output, text);
  }
  return v.free ? kExitOk : kExitNegative;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  PlanarEmbedding emb = load(o.file);
  emit(out, o.output, decomposition_to_json(emb, decompose_triangular_blocks(emb)));
  return kExitOk;
}

int cmd_score(const Options& o, std::ostream& out) {
  PlanarEmbedding emb = load(o.file);
  auto blocks = decompose_triangular_blocks(emb);
  emit(out, o.output, ledger_to_json(emb, blocks, compute_ledger(emb, blocks)));
  return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  DischargeCertificate cert = partition_and_certify(load(o.file));
  emit(out, o.output, certificate_to_json(cert));
  return cert.verdict ? kExitOk : kExitNegative;
}

int cmd_propositions(const Options& o, std::ostream& out) {
  PropositionReport r =
      check_face_propositions(load(o.file), o.structural ? PropositionMode::kStructural : PropositionMode::kStrict);
  emit(out, o.output, propositions_to_json(r));
  return r.violations.empty() ? kExitOk : kExitNegative;
}

int cmd_bound(const Options& o, std::ostream& out) {
  PlanarEmbedding emb = load(o.file);
  BoundVerdict v = certify_bound(emb.graph(), &emb);
  emit(out, o.output, bound_to_json(v));
  return v.counterexample ? kExitNegative : kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  OracleLimits limits = oracle_limits_from_env();
  if (o.max_order > 0) limits.max_order = o.max_order;
  limits.workers = o.workers;
  auto render = [&](const EnumerationResult& r) {
    return o.format == "text" ? enumeration_to_text(r) : enumeration_to_json(r);
  };
  if (o.path == "augment") {
    emit(out, o.output, render(max_edges_c6free_planar_augment(o.n, limits)));
    return kExitOk;
  }
  EnumerationResult a = max_edges_c6free_planar(o.n, limits);
  if (o.path == "subsets") {
    emit(out, o.output, render(a));
    return kExitOk;
  }
  EnumerationResult b = max_edges_c6free_planar_augment(o.n, limits);
  bool agree = a.max_edges == b.max_edges && a.witnesses == b.witnesses;
  if (o.format == "text") {
    emit(out, o.output, render(a) + render(b) + "agree: " + (agree ? "true" : "false") + "\n");
  } else {
    json both = {{"agree", agree}, {"subsets", json::parse(render(a))}, {"augmentation", json::parse(render(b))}};
    emit(out, o.output, both.dump(2) + "\n");
  }
  return agree ? kExitOk : kExitNegative;
}

int cmd_export(const Options& o, std::ostream& out) {
  PlanarEmbedding emb = load(o.file);
  if (o.canonical) emb = PlanarEmbedding::build(canonical_rotation(emb));
  emit(out, o.output, o.format == "dot" ? graph_to_dot(emb) : graph_to_json(emb));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"turan_lab: C6-free planar graph constructions, decompositions and certificates"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) { sub->add_option("--file,-f", o.file, "graph JSON")->required()->check(CLI::ExistingFile); };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output,-o", o.output, "write the artifact here instead of stdout"); };

  auto* construct = app.add_subcommand("construct", "build an extremal graph and verify its report");
  construct->add_option("--family", o.family)->required()->check(CLI::IsMember({"g0", "h0", "chain", "general"}));
  construct->add_option("--k", o.k, "column count for g0 / h0")->check(CLI::NonNegativeNumber);
  construct->add_option("--t", o.t, "K5^- copies for chain")->check(CLI::PositiveNumber);
  construct->add_option("--ell", o.ell, "forbidden cycle length")->check(CLI::Range(6, 64));
  construct->add_option("--base", o.base, "base graph JSON for the general family")->check(CLI::ExistingFile);
  construct->add_option("--out", o.out_dir, "directory for graph and report files");
  construct->add_option("--format", o.format, "graph format")->check(CLI::IsMember({"json", "dot"}));
  add_output(construct);

  auto* check = app.add_subcommand("check", "C_ell-freeness verdict with witness");
  add_file(check);
  check->add_option("--ell", o.ell)->check(CLI::Range(3, 64));
  check->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  add_output(check);

  auto* decompose = app.add_subcommand("decompose", "triangular-block report");
  add_file(decompose);
  add_output(decompose);

  auto* score = app.add_subcommand("score", "contribution ledger and per-block table rows");
  add_file(score);
  add_output(score);

  auto* certify = app.add_subcommand("certify", "discharging partition certificate");
  add_file(certify);
  add_output(certify);

  auto* props = app.add_subcommand("propositions", "exterior face checks");
  add_file(props);
  props->add_flag("--structural", o.structural, "skip the C6 precheck");
  add_output(props);

  auto* bound = app.add_subcommand("bound", "peeling and block-size edge bound");
  add_file(bound);
  add_output(bound);

  auto* oracle = app.add_subcommand("oracle", "exhaustive ex_P(n, C6)");
  oracle->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  oracle->add_option("--path", o.path)->check(CLI::IsMember({"subsets", "augment", "both"}));
  oracle->add_option("--max-order", o.max_order, "order cap (default 7 or TURAN_LAB_BUDGET)")->check(CLI::PositiveNumber);
  oracle->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
  oracle->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  add_output(oracle);

  auto* exporter = app.add_subcommand("export", "re-emit a graph as JSON or DOT");
  add_file(exporter);
  exporter->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  exporter->add_flag("--canonical", o.canonical, "relabel by the canonical rotation");
  add_output(exporter);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*construct) return cmd_construct(o, out);
    if (*check) return cmd_check(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*score) return cmd_score(o, out);
    if (*certify) return cmd_certify(o, out);
    if (*props) return cmd_propositions(o, out);
    if (*bound) return cmd_bound(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*exporter) return cmd_export(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const FileError& e) {
    err << "FileError: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace turan::cli
