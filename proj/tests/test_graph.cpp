#include <gtest/gtest.h>

#include <random>

#include "isg/catalog.hpp"
#include "isg/error.hpp"
#include "isg/intersection_graph.hpp"
#include "oracles.hpp"

using namespace isg;

namespace {

GeneratedGroup from_catalog(std::vector<std::string> tokens) {
  return catalog(parse_catalog_spec(tokens));
}

std::size_t vertex_of(const SubgroupSet& s, std::size_t degree, std::vector<const char*> gens) {
  std::vector<Permutation> ps;
  for (const char* g : gens) ps.push_back(parse_cycles(g, degree));
  auto id = s.find(build_chain(GeneratedGroup(degree, ps)));
  if (!id) throw std::runtime_error("not a vertex");
  return *id;
}

}  // namespace

TEST(Graph, KleinFourIsDisconnected) {
  auto a = analyze_group(from_catalog({"direct_product", "cyclic:2", "cyclic:2"}));
  EXPECT_EQ(a.graph.vertex_count(), 3u);
  EXPECT_EQ(a.graph.edge_count(), 0u);
  EXPECT_EQ(a.graph.component_count(), 3u);
  EXPECT_FALSE(a.diameter.connected);
  EXPECT_EQ(a.diameter.to_string(), "disconnected");
  EXPECT_EQ(distance(a.graph, 0, 1), kUnreachable);
  EXPECT_EQ(distance(a.graph, 2, 2), 0u);
}

TEST(Graph, QuaternionIsComplete) {
  auto a = analyze_group(quaternion8());
  EXPECT_EQ(a.graph.vertex_count(), 4u);
  EXPECT_TRUE(a.graph.complete());
  EXPECT_EQ(a.diameter, (DiameterResult{true, 1}));
}

TEST(Graph, AlternatingFourKleinSubgroupMeetsInvolutions) {
  auto a = analyze_group(alternating_group(4));
  ASSERT_EQ(a.graph.vertex_count(), 8u);
  std::size_t v4 = vertex_of(a.subgroups, 4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  for (const char* inv : {"(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"})
    EXPECT_TRUE(a.graph.adjacent(v4, vertex_of(a.subgroups, 4, {inv})));
}

TEST(Graph, AlternatingFiveDiameterThree) {
  auto a = analyze_group(alternating_group(5));
  EXPECT_EQ(a.graph.vertex_count(), 57u);
  EXPECT_EQ(a.diameter, (DiameterResult{true, 3}));
}

TEST(Graph, CyclicFourTimesTwo) {
  auto a = analyze_group(from_catalog({"direct_product", "cyclic:4", "cyclic:2"}));
  EXPECT_EQ(a.graph.vertex_count(), 6u);
  EXPECT_EQ(a.diameter, (DiameterResult{true, 2}));
  std::size_t big = vertex_of(a.subgroups, 6, {"(1,2,3,4)"});
  std::size_t small = vertex_of(a.subgroups, 6, {"(5,6)"});
  EXPECT_EQ(distance(a.graph, small, big), 2u);
  EXPECT_THROW(distance(a.graph, 0, 99), InvalidArgument);
}

TEST(Graph, Diam2Criterion) {
  auto a5 = diam2_criterion(alternating_group(5));
  EXPECT_FALSE(a5.holds);
  ASSERT_TRUE(a5.generating_pair);
  EXPECT_EQ(join(GeneratedGroup(5, {a5.generating_pair->first}),
                 std::span(&a5.generating_pair->second, 1))
                .order(),
            60);
  EXPECT_TRUE(diam2_criterion(from_catalog({"direct_product", "cyclic:4", "cyclic:2"})).holds);
  EXPECT_TRUE(diam2_criterion(quaternion8()).holds);
}

TEST(Graph, PrimeReduction) {
  auto a5 = analyze_group(alternating_group(5));
  auto r = prime_reduction_check(a5.graph);
  EXPECT_EQ(r.diameter.value, 3u);
  EXPECT_EQ(r.prime_max, 3u);
  EXPECT_TRUE(r.equal);
  EXPECT_FALSE(r.degenerate);

  auto c6 = prime_reduction_check(analyze_group(cyclic_group(6)).graph);
  EXPECT_FALSE(c6.diameter.connected);
  EXPECT_FALSE(c6.degenerate);

  auto q8 = prime_reduction_check(analyze_group(quaternion8()).graph);
  EXPECT_EQ(q8.diameter.value, 1u);
  EXPECT_EQ(q8.prime_max, 0u);
  EXPECT_EQ(q8.prime_order_vertices, 1u);
  EXPECT_FALSE(q8.equal);
  EXPECT_TRUE(q8.degenerate);
}

TEST(Graph, ExportListsNeighbors) {
  auto a = analyze_group(alternating_group(4));
  auto j = a.graph.to_json(a.subgroups);
  EXPECT_EQ(j["vertex_count"], 8);
  ASSERT_EQ(j["vertices"].size(), 8u);
  std::size_t degree_sum = 0;
  for (const auto& v : j["vertices"]) degree_sum += v["neighbors"].size();
  EXPECT_EQ(degree_sum, 2 * a.graph.edge_count());
}

TEST(Graph, EmptyGraphIsDisconnected) {
  auto a = analyze_group(cyclic_group(5));
  EXPECT_EQ(a.graph.vertex_count(), 0u);
  EXPECT_FALSE(a.diameter.connected);
}

TEST(GraphProperty, MatchesFloydWarshallOracle) {
  for (const auto& e : builtin_catalog()) {
    if (e.order > 200) continue;
    auto g = catalog(e.spec);
    auto a = analyze_group(g);
    oracle::Table t(g);
    auto verts = oracle::vertices(t);
    ASSERT_EQ(verts.size(), a.graph.vertex_count()) << e.spec.to_string();
    auto d = oracle::distances(verts, t.id());
    int expected = oracle::diameter(d);
    if (expected < 0)
      EXPECT_FALSE(a.diameter.connected) << e.spec.to_string();
    else
      EXPECT_EQ(a.diameter, (DiameterResult{true, static_cast<std::uint32_t>(expected)}))
          << e.spec.to_string();
    std::size_t edges = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) edges += d[i][j] == 1;
    EXPECT_EQ(edges, a.graph.edge_count()) << e.spec.to_string();
  }
}

TEST(GraphProperty, SiftAdjacencyMatchesElementSets) {
  for (const auto& e : builtin_catalog()) {
    if (e.order > 120) continue;
    auto s = all_subgroups(catalog(e.spec));
    auto by_sets = build_graph(s);
    GraphOptions o;
    o.method = AdjacencyMethod::kSift;
    auto by_sift = build_graph(s, o);
    for (std::size_t u = 0; u < s.size(); ++u)
      EXPECT_EQ(by_sets.neighbors(u), by_sift.neighbors(u)) << e.spec.to_string() << " " << u;
  }
}

TEST(GraphProperty, ContainmentImpliesAdjacency) {
  for (const auto& e : builtin_catalog()) {
    if (e.order > 720) continue;
    auto a = analyze_group(catalog(e.spec));
    const auto& m = a.subgroups.members();
    for (std::size_t u = 0; u < m.size(); ++u)
      for (std::size_t v = 0; v < m.size(); ++v)
        if (u != v && m[u].nonidentity.is_subset_of(m[v].nonidentity))
          EXPECT_TRUE(a.graph.adjacent(u, v)) << e.spec.to_string();
  }
}

TEST(GraphProperty, NoSelfLoopsAndSymmetric) {
  auto a = analyze_group(symmetric_group(4));
  for (std::size_t u = 0; u < a.graph.vertex_count(); ++u) {
    EXPECT_FALSE(a.graph.adjacent(u, u));
    for (std::size_t v = 0; v < a.graph.vertex_count(); ++v)
      EXPECT_EQ(a.graph.adjacent(u, v), a.graph.adjacent(v, u));
  }
}

TEST(GraphProperty, RelabelingInvariance) {
  std::mt19937_64 rng(41);
  for (const char* token : {"symmetric:4", "alternating:5", "dihedral:6"}) {
    auto g = from_catalog({token});
    auto base = analyze_group(g);
    for (int trial = 0; trial < 2; ++trial) {
      auto s = oracle::random_permutation(g.degree, rng);
      GeneratedGroup moved = g;
      for (auto& p : moved.generators) p = conjugate(p, s);
      auto a = analyze_group(moved);
      EXPECT_EQ(a.diameter, base.diameter) << token;
      EXPECT_EQ(a.graph.vertex_count(), base.graph.vertex_count()) << token;
      EXPECT_EQ(a.graph.edge_count(), base.graph.edge_count()) << token;
    }
  }
}

TEST(GraphProperty, ThreadCountDoesNotChangeResults) {
  auto s = all_subgroups(symmetric_group(5));
  auto one = build_graph(s);
  GraphOptions o;
  o.threads = 4;
  auto four = build_graph(s, o);
  for (std::size_t u = 0; u < s.size(); ++u) EXPECT_EQ(one.neighbors(u), four.neighbors(u));
  EXPECT_EQ(diameter(one, 1), diameter(four, 4));
}

TEST(GraphProperty, GuardedLemmas) {
  for (const auto& e : builtin_catalog()) {
    if (e.order > 720) continue;
    auto g = catalog(e.spec);
    auto a = analyze_group(g);
    bool criterion = diam2_criterion(g).holds;
    if (a.diameter == DiameterResult{true, 2}) EXPECT_TRUE(criterion) << e.spec.to_string();
    if (criterion && a.diameter.connected && a.graph.vertex_count() >= 2 && !a.graph.complete())
      EXPECT_EQ(a.diameter.value, 2u) << e.spec.to_string();
    if (a.diameter.connected && a.diameter.value >= 3)
      EXPECT_TRUE(prime_reduction_check(a.graph).equal) << e.spec.to_string();
  }
}
