#include "rainbowtri/turan.hpp"

#include <gtest/gtest.h>

#include <bit>

#include "oracles.hpp"
#include "rainbowtri/rainbow.hpp"

using namespace rainbowtri;

namespace {

// exhaustive subset oracle: maximum edge-subset size with matching < t
int mtfree_bruteforce(const Graph& g, int t) {
  const int m = g.size();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    Graph h(g.order());
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1) h.add_edge(g.edge(e).u, g.edge(e).v);
    if (max_matching(h).size() < t) best = size;
  }
  return best;
}

}  // namespace

TEST(MtFreeSubgraph, K4AgainstFullSubsetEnumeration) {
  Graph k4 = oracles::complete_graph(4);
  MtFreeResult r = max_mtfree_subgraph(k4, 2);
  EXPECT_EQ(r.edges.size(), 3u);
  EXPECT_TRUE(r.exhausted);
  EXPECT_EQ(static_cast<int>(r.edges.size()), mtfree_bruteforce(k4, 2));
}

TEST(MtFreeSubgraph, BruteForceAgreementOnAllSmallTriangulations) {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& tri : generate_triangulations(n)) {
      for (int t = 2; t <= 3; ++t) {
        MtFreeResult r = max_mtfree_subgraph(tri, t);
        Graph sub(tri.order());
        for (EdgeId e : r.edges) sub.add_edge(tri.edge(e).u, tri.edge(e).v);
        EXPECT_LT(max_matching(sub).size(), t);
        EXPECT_EQ(static_cast<int>(r.edges.size()), mtfree_bruteforce(tri, t));
      }
    }
  }
}

TEST(MtFreeSubgraph, LargeTKeepsEverything) {
  for (const Graph& tri : generate_triangulations(7)) {
    MtFreeResult r = max_mtfree_subgraph(tri, 7 / 2 + 1);
    EXPECT_EQ(r.edges.size(), static_cast<std::size_t>(tri.size()));
  }
}

TEST(MtFreeSubgraph, FlagsNonTriangulationInput) {
  MtFreeResult r = max_mtfree_subgraph(oracles::cycle_graph(4), 2);
  EXPECT_FALSE(r.input_was_triangulation);
  EXPECT_EQ(r.edges.size(), 2u);  // two edges sharing a vertex
  EXPECT_EQ(static_cast<int>(r.edges.size()), mtfree_bruteforce(oracles::cycle_graph(4), 2));
}

TEST(MtFreeSubgraph, TrivialTargets) {
  Graph k4 = oracles::complete_graph(4);
  EXPECT_TRUE(max_mtfree_subgraph(k4, 1).edges.empty());
  EXPECT_THROW(max_mtfree_subgraph(k4, 0), domain_error);
}

TEST(PlanarTuran, ClosedFormBranch) {
  TuranCertificate c = planar_turan_matching(7, 4);
  EXPECT_EQ(c.value, 15);  // 3n-6, since 7 <= 2t-1
  EXPECT_TRUE(c.exhausted);
  EXPECT_TRUE(is_triangulation(c.witness));
  // closed form needs no generation, so arbitrary orders work
  EXPECT_EQ(planar_turan_matching(100, 51).value, 294);
}

TEST(PlanarTuran, SearchValuesAndWitnesses) {
  for (auto [n, t, want] : {std::tuple{8, 4, 15}, {9, 4, 17}, {10, 5, 22}}) {
    TuranCertificate c = planar_turan_matching(n, t);
    EXPECT_EQ(c.value, want);
    EXPECT_TRUE(c.exhausted);
    EXPECT_TRUE(planar_quick(c.witness));
    EXPECT_FALSE(has_matching_of_size(c.witness, t));
    EXPECT_EQ(c.witness.size(), c.value);
  }
}

TEST(PlanarTuran, ConstructionConsistency) {
  // the face-placement construction attains the optimum in the search regime
  for (auto [n, t] : {std::pair{8, 4}, {9, 4}, {10, 4}, {10, 5}}) {
    TuranCertificate c = planar_turan_matching(n, t);
    EXPECT_EQ(c.value, build_turan_extremal(n, t).graph.size());
  }
}

TEST(PlanarTuran, SmallTUsesStarAndBookSeeds) {
  TuranCertificate c2 = planar_turan_matching(6, 2);
  EXPECT_EQ(c2.value, 5);  // spanning star
  TuranCertificate c3 = planar_turan_matching(6, 3);
  EXPECT_GE(c3.value, 2 * 6 - 3);  // at least the book
  EXPECT_TRUE(c3.exhausted);
}

TEST(PlanarTuran, CrossModuleBoundAgainstAntiRamsey) {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& tri : generate_triangulations(n)) {
      for (int t = 2; t <= 3; ++t) {
        if (max_matching(tri).size() < t) continue;
        ARCertificate ar = anti_ramsey_value(tri, t);
        MtFreeResult mt = max_mtfree_subgraph(tri, t);
        EXPECT_LE(ar.value, static_cast<long long>(mt.edges.size()));
      }
    }
  }
}

TEST(PlanarTuran, ParallelWorkersAgree) {
  TuranCertificate seq = planar_turan_matching(9, 4, Budget::unlimited(), 1);
  TuranCertificate par = planar_turan_matching(9, 4, Budget::unlimited(), 4);
  EXPECT_EQ(seq.value, par.value);
  EXPECT_TRUE(seq.witness == par.witness);
}

TEST(PlanarTuran, DomainErrors) {
  EXPECT_THROW(planar_turan_matching(2, 2), domain_error);
  EXPECT_THROW(planar_turan_matching(20, 4), domain_error);  // above generation cap
}
