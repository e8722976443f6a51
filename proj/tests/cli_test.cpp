#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "support.hpp"
#include "turan_lab/canonical.hpp"
#include "turan_lab/construct.hpp"
#include "turan_lab/io.hpp"
#include "turan_lab/oracle.hpp"

namespace turan {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("turan_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string put(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string put(const std::string& name, const PlanarEmbedding& emb) { return put(name, graph_to_json(emb)); }
  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(Cli, ConstructG0WritesGraphAndReport) {
  Outcome r = run({"construct", "--family", "g0", "--k", "1", "--ell", "6", "--out", (dir_ / "g0").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  json report = json::parse(slurp(dir_ / "g0" / "report.json"));
  EXPECT_EQ(report["v"], 64);
  EXPECT_EQ(report["e"], 153);
  EXPECT_EQ(report["c_ell_free"], true);
  PlanarEmbedding g = parse_graph_json(slurp(dir_ / "g0" / "graph.json"));
  EXPECT_EQ(g.vertex_count(), 64);
  EXPECT_EQ(g.edge_count(), 153);
}

TEST_F(Cli, ConstructOtherFamilies) {
  Outcome h = run({"construct", "--family", "h0", "--k", "1"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(json::parse(h.out)["report"]["v"], 46);
  Outcome c = run({"construct", "--family", "chain", "--t", "4"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(json::parse(c.out)["report"]["e"], 36);
  Outcome g = run({"construct", "--family", "general", "--ell", "7"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(json::parse(g.out)["report"]["e"], 96);
  Outcome dot = run({"construct", "--family", "chain", "--t", "1", "--format", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("graph", 0), 0u);
}

TEST_F(Cli, ConstructFromSuppliedBase) {
  std::string base = put("base.json", test::cycle(8));
  Outcome r = run({"construct", "--family", "general", "--ell", "7", "--base", base});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["report"]["v"], 40);
  Outcome wrong = run({"construct", "--family", "general", "--ell", "8", "--base", base});
  EXPECT_EQ(wrong.code, 2);
  std::string bad = put("bad.json", test::k4());
  EXPECT_EQ(run({"construct", "--family", "general", "--ell", "7", "--base", bad}).code, 2);
}

TEST_F(Cli, ConstructRejectsBadParameters) {
  EXPECT_EQ(run({"construct", "--family", "g0", "--k", "1", "--ell", "7"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "h0", "--k", "0"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "nope"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "chain", "--t", "0"}).code, 2);
}

TEST_F(Cli, CheckChainOfFour) {
  std::string f = put("chain4.json", chain_of_k5minus(4));
  Outcome r = run({"check", "--file", f, "--ell", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C6-free: true"), std::string::npos);
}

TEST_F(Cli, CheckFindsWitness) {
  std::string f = put("oct.json", test::octahedron());
  Outcome r = run({"check", "--file", f, "--ell", "6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("C6-free: false"), std::string::npos);
  EXPECT_NE(r.out.find("witness:"), std::string::npos);
  Outcome j = run({"check", "--file", f, "--ell", "6", "--format", "json"});
  json w = json::parse(j.out);
  EXPECT_EQ(w["witness"].size(), 6u);
}

TEST_F(Cli, CertifyRejectsSevenCycle) {
  std::string f = put("c7.json", test::cycle(7));
  Outcome r = run({"certify", "--file", f});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("HypothesisViolated"), std::string::npos);
}

TEST_F(Cli, CertifyRing) {
  std::string f = put("ring.json", test::k5minus_ring(4));
  Outcome r = run({"certify", "--file", f});
  ASSERT_EQ(r.code, 0) << r.err;
  json c = json::parse(r.out);
  EXPECT_EQ(c["verdict"], true);
}

TEST_F(Cli, DecomposeScoreAndBound) {
  std::string f = put("chain4.json", chain_of_k5minus(4));
  Outcome d = run({"decompose", "--file", f});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(json::parse(d.out)["blocks"].size(), 4u);
  Outcome b = run({"bound", "--file", f});
  ASSERT_EQ(b.code, 0) << b.err;
  json v = json::parse(b.out);
  EXPECT_EQ(v["slack"], 13);
  EXPECT_EQ(v["small_exception"], true);
  std::string ring = put("ring.json", test::k5minus_ring(4));
  EXPECT_EQ(run({"score", "--file", ring}).code, 0);
}

TEST_F(Cli, Propositions) {
  EXPECT_EQ(run({"propositions", "--file", put("ring.json", test::k5minus_ring(4))}).code, 0);
  EXPECT_EQ(run({"propositions", "--file", put("oct.json", test::octahedron())}).code, 2);
}

TEST_F(Cli, Oracle) {
  Outcome r = run({"oracle", "--n", "5", "--path", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["subsets"]["max_edges"], 9);
  Outcome t = run({"oracle", "--n", "6", "--format", "text"});
  EXPECT_NE(t.out.find("ex_P(n,C6)=10"), std::string::npos);
  EXPECT_EQ(run({"oracle", "--n", "8"}).code, 2);
}

TEST_F(Cli, ExportRoundTrip) {
  PlanarEmbedding g = assemble_extremal(0, ExtremalVariant::kG0).embedding;
  std::string f = put("g.json", g);
  Outcome once = run({"export", "--file", f});
  ASSERT_EQ(once.code, 0);
  std::string again = put("again.json", once.out);
  EXPECT_EQ(run({"export", "--file", again}).out, once.out);
  EXPECT_EQ(parse_graph_json(once.out).rotation_spec(), g.rotation_spec());
  Outcome dot = run({"export", "--file", f, "--format", "dot"});
  EXPECT_NE(dot.out.find("--"), std::string::npos);
}

TEST_F(Cli, CanonicalExportForgetsLabels) {
  PlanarEmbedding g = test::k5minus_ring(4);
  const RotationSpec spec = g.rotation_spec();
  const int n = g.vertex_count();
  RotationSpec moved(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : spec[v]) moved[(v * 7 + 3) % n].push_back((u * 7 + 3) % n);
  }
  Outcome a = run({"export", "--canonical", "--file", put("a.json", g)});
  Outcome b = run({"export", "--canonical", "--file", put("b.json", PlanarEmbedding::build(moved))});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, OutputIsDeterministic) {
  std::string f = put("ring.json", test::k5minus_ring(5));
  for (const char* cmd : {"certify", "score", "decompose", "bound"}) {
    EXPECT_EQ(run({cmd, "--file", f}).out, run({cmd, "--file", f}).out) << cmd;
  }
  run({"certify", "--file", f, "--output", (dir_ / "c1.json").string()});
  run({"certify", "--file", f, "--output", (dir_ / "c2.json").string()});
  EXPECT_EQ(slurp(dir_ / "c1.json"), slurp(dir_ / "c2.json"));
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", "--file", (dir_ / "missing.json").string()}).code, 2);
  Outcome bad = run({"check", "--file", put("bad.json", "{not json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("ParseError"), std::string::npos);
  Outcome k5 = run({"check", "--file", put("k5.json", R"({"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})")});
  EXPECT_EQ(k5.code, 2);
  EXPECT_NE(k5.err.find("NotPlanar"), std::string::npos);
  EXPECT_EQ(run({"check", "--file", put("c.json", test::cycle(5)), "--ell", "2"}).code, 2);
}

TEST_F(Cli, EdgeListInputIsEmbedded) {
  Outcome r = run({"check", "--file", put("e.json", R"({"n":7,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[6,0]]})"), "--ell",
               "7"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness: 0 1 2 3 4 5 6"), std::string::npos);
}

}  // namespace
}  // namespace turan
