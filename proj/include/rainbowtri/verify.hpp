#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rainbowtri/constructions.hpp"
#include "rainbowtri/graph.hpp"
#include "rainbowtri/graph6.hpp"
#include "rainbowtri/matching.hpp"
#include "rainbowtri/planarity.hpp"
#include "rainbowtri/rainbow.hpp"
#include "rainbowtri/search.hpp"
#include "rainbowtri/triangulation.hpp"
#include "rainbowtri/turan.hpp"

namespace rainbowtri {

struct VerifyResult {
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    pass = pass && ok;
  }
};

/// Independent maximum-matching oracle: subset DP over vertices (n <= 20).
/// Deliberately shares nothing with the blossom path.
inline int matching_number_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw domain_error("brute-force matching oracle supports n <= 20");
  std::vector<signed char> dp(std::size_t{1} << n, -1);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    signed char best = dp[rest];  // leave v unmatched
    for (int u : g.neighbors(v)) {
      if (u != v && (mask >> u & 1)) {
        signed char c = dp[rest & ~(1u << u)];
        if (c + 1 > best) best = static_cast<signed char>(c + 1);
      }
    }
    dp[mask] = best;
  }
  return dp[(std::size_t{1} << n) - 1];
}

namespace verifydetail {

inline Graph random_graph(std::mt19937_64& rng, int n, int percent) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
  return g;
}

inline std::string pair_tag(int n, int t) {
  std::ostringstream os;
  os << "(n=" << n << ", t=" << t << ")";
  return os.str();
}

}  // namespace verifydetail

/// Generation counts against published values, graph6 roundtrips, the planar
/// bipartite pair bound, and completion behavior.
inline VerifyResult verify_core_invariants(std::uint64_t seed) {
  VerifyResult r;
  const int expected_counts[] = {1, 1, 2, 5, 14, 50};
  std::vector<Graph> t8;
  for (int n = 4; n <= 9; ++n) {
    auto tris = generate_triangulations(n);
    bool all_good = true;
    for (const Graph& t : tris) {
      all_good = all_good && is_triangulation(t) && t.size() == 3 * n - 6 && t.connected();
      all_good = all_good && parse_graph6(emit_graph6(t)) == t;
    }
    r.check(static_cast<int>(tris.size()) == expected_counts[n - 4] && all_good,
            "triangulation stream n=" + std::to_string(n) + ": count " +
                std::to_string(tris.size()) + ", invariants, graph6 roundtrip");
    if (n == 8) t8 = tris;
  }

  std::mt19937_64 rng(seed);
  bool bound_ok = true, completion_ok = true;
  for (int iter = 0; iter < 60; ++iter) {
    const Graph& host = t8[rng() % t8.size()];
    Graph sub(host.order());
    for (const Edge& e : host.edges())
      if (rng() % 100 < 70) sub.add_edge(e.u, e.v);
    sub.mark_planar();
    VertexSetPair p;
    for (int v = 0; v < sub.order(); ++v) {
      switch (rng() % 3) {
        case 0: p.x.push_back(v); break;
        case 1: p.y.push_back(v); break;
        default: break;
      }
    }
    if (p.x.size() + p.y.size() >= 3 && !p.x.empty() && !p.y.empty()) {
      int cnt = count_pair_edges(sub, p);  // throws if the planar bound breaks
      bound_ok = bound_ok &&
                 cnt <= 2 * static_cast<int>(p.x.size() + p.y.size()) - 4;
    }
    CompletionResult comp = triangulate_completion(sub);
    completion_ok = completion_ok && is_triangulation(comp.graph);
    for (const Edge& e : sub.edges())
      completion_ok = completion_ok && comp.graph.has_edge(e.u, e.v);
    completion_ok =
        completion_ok &&
        comp.graph.size() == sub.size() + static_cast<int>(comp.added_edges.size());
  }
  r.check(bound_ok, "count_pair_edges obeys 2(|X|+|Y|)-4 on random planar subgraphs");
  r.check(completion_ok, "triangulate_completion yields edge-superset triangulations");

  Graph k4 = parse_graph6("C~");
  r.check(triangulate_completion(k4).added_edges.empty(), "completion fixes K4");
  return r;
}

/// Blossom vs. subset-DP oracle plus Gallai-Edmonds structure on seeded
/// random graphs.
inline VerifyResult verify_matching_oracle(std::uint64_t seed, int samples = 500) {
  VerifyResult r;
  std::mt19937_64 rng(seed);
  int size_fail = 0, ge_fail = 0;
  for (int i = 0; i < samples; ++i) {
    int n = 1 + static_cast<int>(rng() % 9);
    int percent = 15 + static_cast<int>(rng() % 70);
    Graph g = verifydetail::random_graph(rng, n, percent);

    Matching m = max_matching(g);
    if (m.size() != matching_number_bruteforce(g)) ++size_fail;

    GEDecomposition ge = gallai_edmonds(g);
    bool ok = 2 * ge.matching_size == n - (ge.odd_count() - static_cast<int>(ge.s.size()));
    ok = ok && static_cast<int>(ge.s.size()) <= ge.matching_size;
    for (const auto& comp : ge.odd_components)
      ok = ok && is_factor_critical(g.induced(comp));
    for (const auto& comp : ge.even_components)
      ok = ok && has_perfect_matching(g.induced(comp));
    if (!ok) ++ge_fail;
  }
  r.check(size_fail == 0, "max_matching equals brute force on " + std::to_string(samples) +
                              " random graphs (failures: " + std::to_string(size_fail) + ")");
  r.check(ge_fail == 0, "gallai_edmonds formula and component structure (failures: " +
                            std::to_string(ge_fail) + ")");
  return r;
}

/// Extremal construction sweep: 4 <= t <= 12, t+3 <= n <= 200.
inline VerifyResult verify_constructions() {
  VerifyResult r;
  int bad = 0, total = 0;
  for (int t = 4; t <= 12; ++t) {
    for (int n = t + 3; n <= 200; ++n) {
      ++total;
      ExtremalConstruction c = build_turan_extremal(n, t);
      bool ok = c.graph.size() == std::min(3 * n - 6, 2 * n + 3 * t - 13);
      ok = ok && planar_quick(c.graph);
      ok = ok && !has_matching_of_size(c.graph, t);
      if (!ok) ++bad;
    }
  }
  r.check(bad == 0, "extremal sweep over " + std::to_string(total) +
                        " (n,t) pairs: edge formula, planarity, no M_t");
  return r;
}

/// Small exact rainbow numbers against the known table.
inline VerifyResult verify_small_rb(const Budget& budget, int workers) {
  VerifyResult r;
  const std::vector<std::tuple<int, int, long long>> table = {
      {4, 2, 4}, {5, 2, 2}, {6, 2, 2}, {7, 2, 2}, {6, 3, 8}, {7, 3, 8}, {8, 3, 9}};
  for (auto [n, t, want] : table) {
    RbResult res = rainbow_number_class(n, t, budget, workers);
    r.check(res.exact && res.value == want,
            "rb" + verifydetail::pair_tag(n, t) + " = " + std::to_string(res.value) +
                (res.exact ? "" : " (not exhausted)") + ", expected " + std::to_string(want));
  }
  return r;
}

/// Small exact planar Turan numbers against the closed formula.
inline VerifyResult verify_small_turan(const Budget& budget, int workers) {
  VerifyResult r;
  const std::vector<std::tuple<int, int, long long>> table = {
      {7, 4, 15}, {8, 4, 15}, {9, 4, 17}, {10, 4, 19}, {11, 4, 21}, {10, 5, 22}};
  for (auto [n, t, want] : table) {
    TuranCertificate cert = planar_turan_matching(n, t, budget, workers);
    bool witness_ok = planar_quick(cert.witness) &&
                      !has_matching_of_size(cert.witness, t) &&
                      cert.witness.size() == cert.value;
    r.check(cert.exhausted && cert.value == want && witness_ok,
            "ex_P" + verifydetail::pair_tag(n, t) + " = " + std::to_string(cert.value) +
                ", expected " + std::to_string(want));
  }
  return r;
}

/// Lower-bound colorings achieving one color less than the known rainbow
/// numbers at (11,5), (30,6), (66,7), (93,10).
inline VerifyResult verify_lower_bound_colorings() {
  VerifyResult r;
  const std::vector<std::pair<int, int>> cases = {{11, 5}, {30, 6}, {66, 7}, {93, 10}};
  for (auto [n, t] : cases) {
    LowerBoundColoring lbc = build_rb_lower_coloring(n, t);
    bool ok = is_triangulation(lbc.host);
    ok = ok && lbc.coloring.num_colors == 2 * n + 3 * t - 15;
    ok = ok && max_rainbow_matching(lbc.host, lbc.coloring).first == t - 1;
    r.check(ok, "lower-bound coloring" + verifydetail::pair_tag(n, t) + ": " +
                    std::to_string(lbc.coloring.num_colors) + " colors, no rainbow M_" +
                    std::to_string(t));
  }
  return r;
}

inline VerifyResult run_verify_suite(const std::string& suite, std::uint64_t seed,
                                     const Budget& budget, int workers) {
  if (suite == "core-invariants") return verify_core_invariants(seed);
  if (suite == "matching-oracle") return verify_matching_oracle(seed);
  if (suite == "constructions") return verify_constructions();
  if (suite == "small-rb") return verify_small_rb(budget, workers);
  if (suite == "small-turan") return verify_small_turan(budget, workers);
  if (suite == "lower-bound-colorings") return verify_lower_bound_colorings();
  throw domain_error(
      "unknown suite '" + suite +
      "' (expected one of: core-invariants, matching-oracle, constructions, small-rb, "
      "small-turan, lower-bound-colorings)");
}

}  // namespace rainbowtri
