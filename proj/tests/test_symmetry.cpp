#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "signlap/spectral.hpp"
#include "signlap/symmetry.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace signlap {
namespace {

using testing::c4;
using testing::p2;
using testing::triangle;

// Random connected graph with weights drawn from {1, 2} so that nontrivial
// isomorphisms are common.
SignedGraph small_graph(std::mt19937_64& rng, int max_n) {
  SignedGraph g = testing::random_graph(rng, {.min_n = 3, .max_n = max_n});
  std::vector<EdgeSpec> edges = g.edge_specs();
  std::bernoulli_distribution coin(0.25);
  for (auto& e : edges) e.weight = coin(rng) ? 2.0 : 1.0;
  return build_graph(edges);
}

TEST(BipartiteSwitching, Examples) {
  EXPECT_EQ(find_bipartite_switching(p2()), SwitchingFunction({Sign::Positive, Sign::Negative}));
  EXPECT_FALSE(find_bipartite_switching(triangle()));
  SignedGraph g = c4();
  auto theta = find_bipartite_switching(g);
  ASSERT_TRUE(theta);
  EXPECT_EQ(theta->to_map(g), (std::map<VertexId, int>{{"1", 1}, {"2", -1}, {"3", 1}, {"4", -1}}));
  SignedGraph switched = apply_switching(g, *theta);
  SignedGraph target = negate(g);
  for (std::size_t k = 0; k < g.edge_count(); ++k) EXPECT_EQ(switched.edges()[k].sign, target.edges()[k].sign);
}

TEST(CertificateSearch, BipartiteGraphsUseColourClasses) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    SignedGraph g = testing::random_graph(rng, {.bipartite = true});
    auto r = find_symmetry_certificate(g);
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_TRUE(r.certificate->perm.is_identity());
    EXPECT_EQ(r.certificate->theta, *find_bipartite_switching(g));
  }
}

TEST(CertificateSearch, UnsignedTriangleHasNone) {
  auto r = find_symmetry_certificate(triangle());
  EXPECT_EQ(r.status, SearchStatus::Absent);
  EXPECT_EQ(r.switchings_tried, 4u);
  EXPECT_FALSE(testing::brute_force_certificate_exists(triangle()));
}

TEST(CertificateSearch, FindsNonBipartiteFiveVertexInstance) {
  std::mt19937_64 rng(47);
  bool found = false;
  for (int trial = 0; trial < 2000 && !found; ++trial) {
    SignedGraph g = testing::random_graph(rng, {.min_n = 5, .max_n = 5});
    std::vector<EdgeSpec> edges = g.edge_specs();
    for (auto& e : edges) e.weight = 1.0;
    g = build_graph(edges);
    if (is_bipartite(g)) continue;
    auto r = find_symmetry_certificate(g);
    if (r.status != SearchStatus::Found) continue;
    found = true;
    EXPECT_TRUE(verify_certificate(g, *r.certificate));
    EXPECT_TRUE(is_spectrum_symmetric(spectrum(g), 1e-9));
  }
  EXPECT_TRUE(found);
}

TEST(CertificateSearch, SoundAndCompleteAgainstBruteForce) {
  std::mt19937_64 rng(53);
  int found = 0, absent = 0;
  for (int trial = 0; trial < 150; ++trial) {
    SignedGraph g = small_graph(rng, 6);
    auto r = find_symmetry_certificate(g);
    ASSERT_NE(r.status, SearchStatus::BudgetExceeded);
    EXPECT_EQ(r.status == SearchStatus::Found, testing::brute_force_certificate_exists(g)) << trial;
    if (r.certificate) {
      ++found;
      EXPECT_TRUE(verify_certificate(g, *r.certificate));
      EXPECT_TRUE(is_spectrum_symmetric(spectrum(g), 1e-8));
      EXPECT_EQ(r.certificate->theta[g.id_order().front()], Sign::Positive);
    } else {
      ++absent;
    }
  }
  EXPECT_GT(found, 0);
  EXPECT_GT(absent, 0);
}

TEST(CertificateSearch, ResultIndependentOfWorkerCount) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    SignedGraph g = small_graph(rng, 7);
    auto serial = find_symmetry_certificate(g, {.workers = 1});
    auto parallel = find_symmetry_certificate(g, {.workers = 4});
    EXPECT_EQ(serial.status, parallel.status);
    EXPECT_EQ(serial.certificate, parallel.certificate);
  }
}

TEST(CertificateSearch, BudgetAndPreconditions) {
  SignedGraph big = testing::complete(6, 1);
  auto r = find_symmetry_certificate(big, {.max_vertices = 5});
  EXPECT_EQ(r.status, SearchStatus::BudgetExceeded);
  EXPECT_FALSE(r.certificate);
  EXPECT_EQ(r.switchings_tried, 0u);

  SignedGraph split = build_graph({{"a", "b", 1.0, 1}, {"c", "d", 1.0, 1}});
  EXPECT_THROW(find_symmetry_certificate(split), GraphError);
}

TEST(VerifyCertificate, Examples) {
  SignedGraph g = c4();
  SymmetryCertificate cert{*find_bipartite_switching(g), VertexBijection::identity(4)};
  EXPECT_TRUE(verify_certificate(g, cert));

  std::vector<Sign> labels = cert.theta.labels();
  labels[g.index_of("2")] = flip(labels[g.index_of("2")]);
  EXPECT_FALSE(verify_certificate(g, {SwitchingFunction(labels), cert.perm}));

  EXPECT_THROW(verify_certificate(g, {SwitchingFunction::identity(3), cert.perm}), GraphError);
  EXPECT_THROW(verify_certificate(g, {cert.theta, VertexBijection::identity(2)}), GraphError);
}

TEST(FindIsomorphism, RelabelledGraphs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    SignedGraph g = testing::random_graph(rng);
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edges()) edges.push_back({g.id(perm[e.u]), g.id(perm[e.v]), e.weight, to_int(e.sign)});
    SignedGraph h = SignedGraph::build(g.vertex_ids(), edges);
    auto iso = find_isomorphism(g, h);
    ASSERT_TRUE(iso);
    EXPECT_TRUE(check_isomorphism(g, h, *iso));
    if (auto other = find_isomorphism(g, negate(h))) EXPECT_TRUE(check_isomorphism(g, negate(h), *other));
  }
}

}  // namespace
}  // namespace signlap
