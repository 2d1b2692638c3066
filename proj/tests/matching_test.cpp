#include "rainbowtri/matching.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbowtri/constructions.hpp"
#include "rainbowtri/verify.hpp"

using namespace rainbowtri;

namespace {

void expect_valid_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.order(), 0);
  for (EdgeId e : m.edges) {
    EXPECT_FALSE(used[g.edge(e).u]);
    EXPECT_FALSE(used[g.edge(e).v]);
    used[g.edge(e).u] = used[g.edge(e).v] = 1;
  }
}

}  // namespace

TEST(MaxMatching, SmallKnownValues) {
  EXPECT_EQ(max_matching(oracles::complete_graph(4)).size(), 2);
  EXPECT_EQ(max_matching(star_graph(4)).size(), 1);  // K_{1,3}
  EXPECT_EQ(max_matching(Graph(6)).size(), 0);
  EXPECT_EQ(max_matching(oracles::cycle_graph(5)).size(), 2);
}

TEST(MaxMatching, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = oracles::random_graph(rng, n, 10 + static_cast<int>(rng() % 80));
    Matching m = max_matching(g);
    expect_valid_matching(g, m);
    EXPECT_EQ(m.size(), matching_number_bruteforce(g));
  }
}

TEST(MaxMatching, AgreesWithBruteForceAtLargerOrders) {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 10 + static_cast<int>(rng() % 7);
    Graph g = oracles::random_graph(rng, n, 10 + static_cast<int>(rng() % 50));
    EXPECT_EQ(max_matching(g).size(), matching_number_bruteforce(g));
  }
}

TEST(MaxMatching, WitnessIsReproducible) {
  std::mt19937_64 rng(2);
  Graph g = oracles::random_graph(rng, 8, 50);
  Matching a = max_matching(g);
  Matching b = max_matching(g);
  EXPECT_EQ(a.edges, b.edges);
}

TEST(MaxMatching, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = oracles::random_graph(rng, 7, 30);
    int before = max_matching(g).size();
    int u = static_cast<int>(rng() % 7), v = static_cast<int>(rng() % 7);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    EXPECT_GE(max_matching(g).size(), before);
  }
}

TEST(HasMatchingOfSize, AntitoneInT) {
  Graph g = build_turan_extremal(9, 4).graph;
  EXPECT_TRUE(has_matching_of_size(g, 0));
  EXPECT_TRUE(has_matching_of_size(g, 3));
  EXPECT_FALSE(has_matching_of_size(g, 4));
  EXPECT_FALSE(has_matching_of_size(g, 5));
  EXPECT_THROW(has_matching_of_size(g, -1), domain_error);
}

TEST(FactorCritical, SmallKnownValues) {
  Graph k3 = oracles::complete_graph(3);
  EXPECT_TRUE(is_factor_critical(k3));
  EXPECT_FALSE(is_factor_critical(oracles::complete_graph(4)));  // even order
  EXPECT_TRUE(is_factor_critical(oracles::cycle_graph(5)));
  EXPECT_FALSE(is_factor_critical(star_graph(5)));
  EXPECT_TRUE(is_factor_critical(Graph(1)));
}

TEST(GallaiEdmonds, StarDecomposition) {
  GEDecomposition ge = gallai_edmonds(star_graph(4));  // K_{1,3}, center 0
  EXPECT_EQ(ge.matching_size, 1);
  ASSERT_EQ(ge.s.size(), 1u);
  EXPECT_EQ(ge.s[0], 0);
  EXPECT_EQ(ge.odd_count(), 3);
  for (const auto& comp : ge.odd_components) EXPECT_EQ(comp.size(), 1u);
  EXPECT_TRUE(ge.even_components.empty());
}

TEST(GallaiEdmonds, PerfectlyMatchedGraph) {
  GEDecomposition ge = gallai_edmonds(oracles::cycle_graph(4));
  EXPECT_EQ(ge.matching_size, 2);
  EXPECT_TRUE(ge.s.empty());
  EXPECT_TRUE(ge.odd_components.empty());
  ASSERT_EQ(ge.even_components.size(), 1u);
  EXPECT_EQ(ge.even_components[0].size(), 4u);
}

TEST(GallaiEdmonds, EmptyGraphIsAllOddSingletons) {
  GEDecomposition ge = gallai_edmonds(Graph(5));
  EXPECT_EQ(ge.matching_size, 0);
  EXPECT_TRUE(ge.s.empty());
  EXPECT_EQ(ge.odd_count(), 5);
}

TEST(GallaiEdmonds, StructureAndDeficiencyMinimalityOnRandomGraphs) {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 80; ++iter) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracles::random_graph(rng, n, 15 + static_cast<int>(rng() % 70));
    GEDecomposition ge = gallai_edmonds(g);
    int d = ge.matching_size;
    EXPECT_EQ(d, matching_number_bruteforce(g));
    EXPECT_EQ(2 * d, n - (ge.odd_count() - static_cast<int>(ge.s.size())));
    EXPECT_LE(static_cast<int>(ge.s.size()), d);
    for (const auto& comp : ge.odd_components) {
      EXPECT_EQ(comp.size() % 2, 1u);
      EXPECT_TRUE(is_factor_critical(g.induced(comp)));
    }
    for (const auto& comp : ge.even_components) {
      EXPECT_EQ(comp.size() % 2, 0u);
      EXPECT_TRUE(has_perfect_matching(g.induced(comp)));
    }
    // S attains the minimum deficiency over random subsets S' with |S'| <= d
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> sp;
      for (int v = 0; v < n && static_cast<int>(sp.size()) < d; ++v)
        if (rng() % n < 2) sp.push_back(v);
      std::vector<int> rest;
      std::vector<char> in_sp(n, 0);
      for (int v : sp) in_sp[v] = 1;
      for (int v = 0; v < n; ++v)
        if (!in_sp[v]) rest.push_back(v);
      Graph h = g.induced(rest);
      int odd = 0;
      for (const auto& comp : h.components())
        if (comp.size() % 2 == 1) ++odd;
      EXPECT_GE(n - (odd - static_cast<int>(sp.size())), 2 * d);
    }
  }
}
