#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "signlap/cli.hpp"
#include "signlap/io.hpp"
#include "support/fixtures.hpp"

namespace signlap {
namespace {

using io::json;
namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("signlap_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write_graph(const std::string& name, const SignedGraph& g) {
    return write(name, io::graph_to_json(g).dump());
  }

  struct Result {
    int code;
    std::string out;
    std::string err;
  };
  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

TEST_F(CliTest, SpectrumOfNegativeK5) {
  auto r = run({"spectrum", write_graph("k5.json", testing::complete(5, -1))});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  ASSERT_EQ(doc["eigenvalues"].size(), 5u);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(doc["eigenvalues"][i].get<double>(), 0.75, 1e-12);
  EXPECT_NEAR(doc["eigenvalues"][4].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(doc["lambda_min"].get<double>(), 0.75, 1e-12);
  EXPECT_NEAR(doc["lambda_max"].get<double>(), 2.0, 1e-12);
  EXPECT_FALSE(doc["symmetric"].get<bool>());
  EXPECT_EQ(doc["tol"].get<double>(), 1e-8);
}

TEST_F(CliTest, CertificateForSingleEdge) {
  std::string p = write_graph("p2.json", testing::p2());
  auto r = run({"certificate", p});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc, json::parse(R"({"theta": {"a": 1, "b": -1}, "perm": {"a": "a", "b": "b"}})"));
  // Documented schema reads back into a verifiable certificate.
  SignedGraph g = io::read_graph(p);
  EXPECT_TRUE(verify_certificate(g, io::certificate_from_json(g, doc)));
}

TEST_F(CliTest, CertificateNegativeAndBudgetExitCodes) {
  auto absent = run({"certificate", write_graph("tri.json", testing::triangle())});
  EXPECT_EQ(absent.code, 3);
  EXPECT_EQ(json::parse(absent.out)["status"], "absent");

  auto budget = run({"certificate", write_graph("c4.json", testing::c4()), "--budget-vertices", "3"});
  EXPECT_EQ(budget.code, 4);
  EXPECT_EQ(json::parse(budget.out)["status"], "budget_exceeded");

  auto split = run({"certificate", write_graph("split.json", build_graph({{"a", "b", 1, 1}, {"c", "d", 1, 1}}))});
  EXPECT_EQ(split.code, 2);
}

TEST_F(CliTest, HeatCsvOnSingleEdge) {
  auto r = run({"heat", write_graph("p2.json", testing::p2()), "--init", "a", "--steps", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "step,a,b\n0,1,0\n1,0,1\n2,1,0\n3,0,1\n4,1,0\n");

  auto j = run({"heat", write_graph("p2.json", testing::p2()), "--init", "[0.5, 0.25]", "--steps", "1",
                "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(json::parse(j.out)["states"], json::parse("[[0.5, 0.25], [0.25, 0.5]]"));
}

TEST_F(CliTest, HeatCsvUsesFullPrecision) {
  SignedGraph g = build_graph({{"a", "b", 1, 1}, {"b", "c", 2, -1}});
  std::string p = write_graph("g.json", g);
  auto a = run({"heat", p, "--init", "a", "--steps", "1"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "step,a,b,c\n0,1,0,0\n1,0,0.33333333333333331,0\n");
  auto c = run({"heat", p, "--init", "c", "--steps", "1"});
  EXPECT_EQ(c.out, "step,a,b,c\n0,0,0,1\n1,0,-0.66666666666666663,0\n");
}

TEST_F(CliTest, BalanceAndBipartite) {
  auto b = run({"balance", write_graph("c4.json", testing::c4())});
  ASSERT_EQ(b.code, 0);
  json doc = json::parse(b.out);
  EXPECT_EQ(doc["classification"], "neither");
  EXPECT_TRUE(doc["balancing_theta"].is_null());

  auto k = run({"balance", write_graph("k5.json", testing::complete(5, -1))});
  EXPECT_EQ(json::parse(k.out)["classification"], "antibalanced");

  auto bip = run({"bipartite", write_graph("c4.json", testing::c4())});
  ASSERT_EQ(bip.code, 0);
  EXPECT_EQ(json::parse(bip.out)["parts"], json::parse(R"([["1","3"],["2","4"]])"));
  EXPECT_EQ(run({"bipartite", write_graph("tri.json", testing::triangle())}).code, 3);
}

TEST_F(CliTest, Periodic) {
  std::string p = write_graph("p2.json", testing::p2());
  auto r = run({"periodic", p, "--init", "a"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["lambda"].get<double>(), 1.0);
  EXPECT_EQ(doc["v"], json::parse(R"({"a": 0.0, "b": 1.0})"));

  auto none = run({"periodic", p, "--init", "[1, 1]"});
  EXPECT_EQ(none.code, 3);

  auto all = run({"periodic", write_graph("c4.json", testing::c4())});
  ASSERT_EQ(all.code, 0);
  json rates = json::parse(all.out)["decay_rates"];
  ASSERT_EQ(rates.size(), 1u);
  EXPECT_NEAR(rates[0].get<double>(), std::sqrt(2.0) / 2, 1e-12);

  EXPECT_EQ(run({"periodic", write_graph("tri.json", testing::triangle())}).code, 3);
}

TEST_F(CliTest, MotifCommands) {
  std::string p = write_graph("p2.json", testing::p2());
  auto rep = run({"replicate", p, "--omega", R"(["b"])"});
  ASSERT_EQ(rep.code, 0) << rep.err;
  SignedGraph star = io::graph_from_json(json::parse(rep.out));
  EXPECT_EQ(star.vertex_ids(), (std::vector<VertexId>{"a", "b", "b'"}));
  EXPECT_EQ(star.degree(0), 2.0);

  auto dir = run({"dirichlet", write_graph("tri.json", testing::triangle()), "--omega", R"(["a","b"])"});
  ASSERT_EQ(dir.code, 0) << dir.err;
  json d = json::parse(dir.out);
  EXPECT_EQ(d["matrix"], json::parse("[[1.0, -0.5], [-0.5, 1.0]]"));
  EXPECT_NEAR(d["eigenvalues"][0].get<double>(), 0.5, 1e-15);

  auto ver = run({"verify-motif", p, "--omega", R"(["b"])"});
  ASSERT_EQ(ver.code, 0) << ver.err;
  EXPECT_TRUE(json::parse(ver.out)["passed"].get<bool>());

  EXPECT_EQ(run({"replicate", p, "--omega", R"(["zz"])"}).code, 2);
  EXPECT_EQ(run({"replicate", p, "--omega", "[]"}).code, 2);
  EXPECT_EQ(run({"replicate", p}).code, 2);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"spectrum", write("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"spectrum", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_EQ(run({"spectrum", write("sign.json", R"({"edges":[{"u":"a","v":"b","weight":1,"sign":2}]})")}).code, 2);
  EXPECT_EQ(run({"spectrum", write("w.json", R"({"edges":[{"u":"a","v":"b","weight":0,"sign":1}]})")}).code, 2);
  EXPECT_EQ(run({"spectrum", write("dup.json", R"({"edges":[{"u":"a","v":"b"},{"u":"b","v":"a"}]})")}).code, 2);
  EXPECT_EQ(run({"frobnicate", "x.json"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  std::string p = write_graph("p2.json", testing::p2());
  EXPECT_EQ(run({"heat", p, "--init", R"({"zz": 1})"}).code, 2);
  EXPECT_EQ(run({"heat", p, "--init", "[1, 2, 3]"}).code, 2);
  EXPECT_EQ(run({"heat", p}).code, 2);
  EXPECT_EQ(run({"spectrum", p, "--tol", "-1"}).code, 2);
  EXPECT_EQ(run({"spectrum", p, "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"spectrum", p, "--format", "xml"}).code, 2);
}

TEST_F(CliTest, OutputIsDeterministic) {
  std::mt19937_64 rng(103);
  SignedGraph g = testing::random_graph(rng, {.min_n = 6, .max_n = 6});
  std::string p = write_graph("g.json", g);
  for (const auto& cmd : {"spectrum", "balance", "bipartite", "certificate", "periodic"}) {
    auto a = run({cmd, p});
    auto b = run({cmd, p});
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_EQ(a.code, b.code);
  }
  auto w1 = run({"certificate", p, "--workers", "1"});
  auto w3 = run({"certificate", p, "--workers", "3"});
  EXPECT_EQ(w1.out, w3.out);
}

TEST(GraphJson, ParsesDocumentedSchema) {
  json doc = json::parse(R"({"vertices": ["b", "a", "c"],
      "edges": [{"u": "a", "v": "b", "weight": 1.5, "sign": -1}, {"u": "c", "v": "b", "weight": 2.0, "sign": 1}]})");
  SignedGraph g = io::graph_from_json(doc);
  EXPECT_EQ(g.vertex_ids(), (std::vector<VertexId>{"b", "a", "c"}));
  EXPECT_EQ(g.signed_weight(g.index_of("a"), g.index_of("b")), -1.5);
  EXPECT_EQ(io::graph_from_json(io::graph_to_json(g)), g);

  EXPECT_THROW(io::graph_from_json(json::parse("[]")), io::InputError);
  EXPECT_THROW(io::graph_from_json(json::parse(R"({"vertices": []})")), io::InputError);
  EXPECT_THROW(io::graph_from_json(json::parse(R"({"edges": [{"u": 1, "v": "b"}]})")), io::InputError);
  EXPECT_THROW(io::graph_from_json(json::parse(R"({"edges": [{"u": "a", "v": "b", "sign": "+"}]})")),
               io::InputError);
  EXPECT_THROW(io::graph_from_json(json::parse(R"({"vertices": ["a", "b", "c"], "edges": [{"u": "a", "v": "b"}]})")),
               GraphError);
}

TEST(GraphJson, RandomGraphsRoundTripBitExactly) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    SignedGraph g = testing::random_graph(rng);
    EXPECT_EQ(io::graph_from_json(json::parse(io::graph_to_json(g).dump())), g);
  }
}

TEST(GraphJson, Vectors) {
  SignedGraph g = testing::triangle();
  EXPECT_EQ(io::vector_from_json(g, json::parse("[1, 2, 3]")), (Vector{1, 2, 3}));
  EXPECT_EQ(io::vector_from_json(g, json::parse(R"({"c": 4})")), (Vector{0, 0, 4}));
  EXPECT_THROW(io::vector_from_json(g, json::parse("[1, 2]")), io::InputError);
  EXPECT_THROW(io::vector_from_json(g, json::parse("3")), io::InputError);
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}

}  // namespace
}  // namespace signlap
