#include "rainbowtri/rainbow.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbowtri/constructions.hpp"
#include "rainbowtri/graph6.hpp"

using namespace rainbowtri;

namespace {

EdgeColoring monochrome(const Graph& g) {
  return EdgeColoring::from_colors(g, std::vector<int>(g.size(), 0));
}

EdgeColoring all_distinct(const Graph& g) {
  std::vector<int> c(g.size());
  for (int e = 0; e < g.size(); ++e) c[e] = e;
  return EdgeColoring::from_colors(g, std::move(c));
}

EdgeColoring random_coloring(std::mt19937_64& rng, const Graph& g, int kmax) {
  // surjective coloring via first-use normalization
  std::vector<int> raw(g.size());
  for (int e = 0; e < g.size(); ++e) raw[e] = static_cast<int>(rng() % kmax);
  std::vector<int> remap(kmax, -1);
  int next = 0;
  for (int& c : raw) {
    if (remap[c] == -1) remap[c] = next++;
    c = remap[c];
  }
  return EdgeColoring::from_colors(g, std::move(raw));
}

void expect_valid_rainbow_witness(const Graph& g, const EdgeColoring& c,
                                  const RainbowWitness& w) {
  std::vector<char> used_v(g.order(), 0);
  std::vector<char> used_c(c.num_colors, 0);
  for (EdgeId e : w.edges) {
    ASSERT_FALSE(used_v[g.edge(e).u]);
    ASSERT_FALSE(used_v[g.edge(e).v]);
    ASSERT_FALSE(used_c[c.color_of[e]]);
    used_v[g.edge(e).u] = used_v[g.edge(e).v] = 1;
    used_c[c.color_of[e]] = 1;
  }
}

}  // namespace

TEST(MaxRainbowMatching, TrivialColorings) {
  Graph k4 = oracles::complete_graph(4);
  EXPECT_EQ(max_rainbow_matching(k4, monochrome(k4)).first, 1);
  EXPECT_EQ(max_rainbow_matching(k4, all_distinct(k4)).first, 2);
  Graph oct = oracles::octahedron();
  EXPECT_EQ(max_rainbow_matching(oct, all_distinct(oct)).first, 3);
  EXPECT_EQ(max_rainbow_matching(Graph(3), monochrome(Graph(3))).first, 0);
}

TEST(MaxRainbowMatching, RejectsPartialColorings) {
  Graph k4 = oracles::complete_graph(4);
  EdgeColoring bad;
  bad.num_colors = 1;
  bad.color_of = {0, 0};  // not total
  EXPECT_THROW(max_rainbow_matching(k4, bad), domain_error);
}

TEST(MaxRainbowMatching, AgreesWithBruteForce) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 3 + static_cast<int>(rng() % 5);
    Graph g = oracles::random_graph(rng, n, 30 + static_cast<int>(rng() % 60));
    if (g.size() == 0) continue;
    EdgeColoring c = random_coloring(rng, g, 1 + static_cast<int>(rng() % g.size()));
    auto [value, witness] = max_rainbow_matching(g, c);
    expect_valid_rainbow_witness(g, c, witness);
    EXPECT_EQ(static_cast<int>(witness.edges.size()), value);
    EXPECT_EQ(value, oracles::max_rainbow_matching_bruteforce(g, c));
  }
}

TEST(MaxRainbowMatching, RefinementNeverDecreasesIt) {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 60; ++iter) {
    Graph g = oracles::random_graph(rng, 6, 60);
    if (g.size() < 2) continue;
    EdgeColoring c = random_coloring(rng, g, 3);
    int before = max_rainbow_matching(g, c).first;
    // split one class: recolor a random edge with a fresh color
    std::vector<int> refined = c.color_of;
    refined[rng() % refined.size()] = c.num_colors;
    std::vector<int> remap(c.num_colors + 1, -1);
    int next = 0;
    for (int& x : refined) {
      if (remap[x] == -1) remap[x] = next++;
      x = remap[x];
    }
    EdgeColoring cr = EdgeColoring::from_colors(g, std::move(refined));
    EXPECT_GE(max_rainbow_matching(g, cr).first, before);
  }
}

TEST(HasRainbowMatching, ThresholdSemantics) {
  Graph k4 = oracles::complete_graph(4);
  EXPECT_TRUE(has_rainbow_matching(k4, all_distinct(k4), 2));
  EXPECT_FALSE(has_rainbow_matching(k4, monochrome(k4), 2));
  EXPECT_TRUE(has_rainbow_matching(k4, monochrome(k4), 0));

  LowerBoundColoring lbc = build_rb_lower_coloring(30, 6);
  EXPECT_FALSE(has_rainbow_matching(lbc.host, lbc.coloring, 6));
  EXPECT_TRUE(has_rainbow_matching(lbc.host, lbc.coloring, 5));
}

TEST(MaxRainbowMatching, SingleSharedClassShapeMatchesBruteForce) {
  // the lower-bound-coloring shape: one multi-edge class, everything else
  // rainbow; the class-branching solver is polynomial here
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = oracles::random_graph(rng, 6, 60);
    if (g.size() < 3) continue;
    std::vector<int> colors(g.size(), 0);
    int next = 1;
    for (int e = 0; e < g.size(); ++e)
      if (rng() % 100 < 60) colors[e] = next++;
    std::vector<int> remap(next, -1);
    int k = 0;
    for (int& c : colors) {
      if (remap[c] == -1) remap[c] = k++;
      c = remap[c];
    }
    EdgeColoring c = EdgeColoring::from_colors(g, std::move(colors));
    EXPECT_EQ(max_rainbow_matching(g, c).first,
              oracles::max_rainbow_matching_bruteforce(g, c));
  }
}

TEST(RepresentativeSubgraph, ChoosesOneEdgePerClass) {
  Graph k4 = oracles::complete_graph(4);
  Graph rep_rainbow = representative_subgraph(k4, all_distinct(k4));
  EXPECT_TRUE(rep_rainbow == k4);

  Graph rep_mono = representative_subgraph(k4, monochrome(k4));
  EXPECT_EQ(rep_mono.size(), 1);
  EXPECT_TRUE(rep_mono.has_edge(0, 1));  // lowest edge id

  EdgeChooser highest = [](const std::vector<EdgeId>& cls) { return cls.back(); };
  Graph rep_high = representative_subgraph(k4, monochrome(k4), highest);
  EXPECT_TRUE(rep_high.has_edge(2, 3));
}

TEST(RepresentativeSubgraph, RainbowFreeColoringsYieldMtFreeSubgraphs) {
  LowerBoundColoring lbc = build_rb_lower_coloring(11, 5);
  Graph rep = representative_subgraph(lbc.host, lbc.coloring);
  EXPECT_EQ(rep.size(), lbc.coloring.num_colors);
  EXPECT_FALSE(has_matching_of_size(rep, 5));

  // the same bound on every anti-Ramsey witness the searcher produces
  for (const Graph& tri : generate_triangulations(6)) {
    for (int t = 2; t <= 3; ++t) {
      ARCertificate cert = anti_ramsey_value(tri, t);
      ASSERT_TRUE(cert.witness.has_value());
      Graph w = representative_subgraph(tri, *cert.witness);
      EXPECT_FALSE(has_matching_of_size(w, t));
    }
  }
}

TEST(CanonicalPartitions, CountMatchesStirlingNumbers) {
  // path with 6 edges; with an unreachable t the searcher enumerates every
  // canonical partition into exactly k classes
  Graph path(7);
  for (int v = 0; v < 6; ++v) path.add_edge(v, v + 1);
  std::uint64_t bell = 0;
  for (int k = 1; k <= 6; ++k) {
    rbdetail::ArSearcher searcher(path, path.size() + 2, Budget::unlimited());
    std::uint64_t got = searcher.count_all(k);
    EXPECT_EQ(got, oracles::stirling2(6, k)) << "k=" << k;
    bell += got;
  }
  EXPECT_EQ(bell, 203u);  // Bell(6)
}

TEST(AntiRamsey, K4MatchingOfSizeTwo) {
  Graph k4 = oracles::complete_graph(4);
  ARCertificate cert = anti_ramsey_value(k4, 2);
  EXPECT_TRUE(cert.exhausted);
  EXPECT_EQ(cert.value, 3);
  ASSERT_TRUE(cert.witness.has_value());
  EXPECT_EQ(cert.witness->num_colors, 3);
  EXPECT_LT(max_rainbow_matching(k4, *cert.witness).first, 2);
}

TEST(AntiRamsey, FiveVertexTriangulation) {
  auto t5 = generate_triangulations(5);
  ASSERT_EQ(t5.size(), 1u);
  ARCertificate cert = anti_ramsey_value(t5[0], 2);
  EXPECT_EQ(cert.value, 1);
  EXPECT_TRUE(cert.exhausted);
}

TEST(AntiRamsey, OctahedronAgainstPartitionBruteForce) {
  // independent oracle: enumerate every canonical partition of the 12 edges
  // and keep the best class count among rainbow-M_3-free ones
  Graph oct = oracles::octahedron();
  const int m = oct.size();
  std::vector<std::array<int, 3>> disjoint_triples;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        auto dis = [&](int x, int y) {
          const Edge &ex = oct.edge(x), &ey = oct.edge(y);
          return ex.u != ey.u && ex.u != ey.v && ex.v != ey.u && ex.v != ey.v;
        };
        if (dis(a, b) && dis(a, c) && dis(b, c)) disjoint_triples.push_back({a, b, c});
      }
  int best = 0;
  std::vector<int> color(m, 0);
  std::function<void(int, int)> enumerate = [&](int e, int opened) {
    if (e == m) {
      for (const auto& tr : disjoint_triples) {
        int c0 = color[tr[0]], c1 = color[tr[1]], c2 = color[tr[2]];
        if (c0 != c1 && c0 != c2 && c1 != c2) return;  // rainbow M_3
      }
      best = std::max(best, opened);
      return;
    }
    for (int c = 0; c <= std::min(opened, m - 1); ++c) {
      color[e] = c;
      enumerate(e + 1, opened + (c == opened));
    }
  };
  enumerate(0, 0);

  ARCertificate cert = anti_ramsey_value(oct, 3);
  EXPECT_TRUE(cert.exhausted);
  EXPECT_EQ(cert.value, best);
  EXPECT_LE(cert.value,
            static_cast<long long>(max_mtfree_subgraph(oct, 3).edges.size()));
}

TEST(AntiRamsey, MonotoneInTAndBoundedByEdges) {
  Graph oct = oracles::octahedron();
  ARCertificate a2 = anti_ramsey_value(oct, 2);
  ARCertificate a3 = anti_ramsey_value(oct, 3);
  EXPECT_LE(a2.value, a3.value);
  EXPECT_LE(a3.value, oct.size());
}

TEST(AntiRamsey, VacuousInstanceIsADomainError) {
  EXPECT_THROW(anti_ramsey_value(oracles::complete_graph(4), 3), domain_error);
  EXPECT_THROW(anti_ramsey_value(star_graph(6), 2), domain_error);
}

TEST(AntiRamsey, BudgetExpiryBracketsInsteadOfGuessing) {
  auto t8 = generate_triangulations(8);
  ARCertificate cert = anti_ramsey_value(t8[0], 3, Budget::seconds(1e-9));
  EXPECT_FALSE(cert.exhausted);
  EXPECT_LE(cert.value, cert.upper_bound);
  ASSERT_TRUE(cert.witness.has_value());
  EXPECT_LT(max_rainbow_matching(t8[0], *cert.witness).first, 3);
  EXPECT_EQ(cert.witness->num_colors, cert.value);
}

TEST(RainbowNumberClass, SmallestClasses) {
  RbResult r42 = rainbow_number_class(4, 2);
  EXPECT_EQ(r42.value, 4);
  EXPECT_TRUE(r42.exact);
  EXPECT_EQ(r42.qualifying, 1);
  EXPECT_LT(max_rainbow_matching(r42.extremal, r42.extremal_coloring).first, 2);
  EXPECT_EQ(r42.extremal_coloring.num_colors, 3);

  RbResult r52 = rainbow_number_class(5, 2);
  EXPECT_EQ(r52.value, 2);
  EXPECT_TRUE(r52.exact);
}

TEST(RainbowNumberClass, VacuousClassIsADomainError) {
  EXPECT_THROW(rainbow_number_class(4, 3), domain_error);
  EXPECT_THROW(rainbow_number_class(5, 3), domain_error);
}

TEST(RainbowNumberClass, WitnessIsReproducible) {
  RbResult a = rainbow_number_class(6, 3);
  RbResult b = rainbow_number_class(6, 3);
  EXPECT_TRUE(a.extremal == b.extremal);
  EXPECT_EQ(a.extremal_coloring.color_of, b.extremal_coloring.color_of);
  EXPECT_EQ(emit_graph6(a.extremal), emit_graph6(b.extremal));
}

TEST(RainbowNumberClass, ParallelWorkersAgreeWithSequential) {
  RbResult seq = rainbow_number_class(7, 3, Budget::unlimited(), 1);
  RbResult par = rainbow_number_class(7, 3, Budget::unlimited(), 4);
  EXPECT_EQ(seq.value, par.value);
  EXPECT_TRUE(seq.extremal == par.extremal);
  EXPECT_EQ(seq.extremal_coloring.color_of, par.extremal_coloring.color_of);
}
