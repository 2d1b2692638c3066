#pragma once

#include <array>
#include <deque>
#include <numeric>
#include <vector>

#include "rainbowtri/coloring.hpp"
#include "rainbowtri/graph.hpp"
#include "rainbowtri/triangulation.hpp"

namespace rainbowtri {

/// Planar M_t-free extremal construction: a triangulated part U of t-1
/// vertices, an independent part V, and a maximal planar bipartite part
/// between them realized by face placement.
struct ExtremalConstruction {
  Graph graph;
  std::vector<int> u_vertices;  // size t-1, induces a triangulation (t >= 4)
  std::vector<int> v_vertices;  // independent set
  int n = 0;
  int t = 0;
};

/// All edges meet U, so the matching number is at most |U| = t-1; the edge
/// count is min{3n-6, 2n+3t-13}. V-vertices get degree 3 while empty faces
/// of the triangulated part remain (one per face, 2(t-1)-4 of them), then
/// degree 2 inside mixed faces swept in creation order.
inline ExtremalConstruction build_turan_extremal(int n, int t) {
  if (t < 4) throw domain_error("turan extremal construction needs t >= 4");
  if (n < t - 1 || n < 3) throw domain_error("turan extremal construction needs n >= max(t-1, 3)");

  const int nu = t - 1;
  ExtremalConstruction out;
  out.n = n;
  out.t = t;
  Graph g(n);

  // stacked triangulation on U = {0..nu-1}, tracking its faces
  std::deque<std::array<int, 3>> u_faces;
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  u_faces.push_back({0, 1, 2});
  u_faces.push_back({0, 1, 2});
  for (int v = 3; v < nu; ++v) {
    auto [a, b, c] = u_faces.front();
    u_faces.pop_front();
    g.add_edge(v, a);
    g.add_edge(v, b);
    g.add_edge(v, c);
    u_faces.push_back({v, a, b});
    u_faces.push_back({v, b, c});
    u_faces.push_back({v, c, a});
  }
  for (int v = 0; v < nu; ++v) out.u_vertices.push_back(v);

  // deterministic fill order: faces sorted by canonical corner triple
  std::vector<std::array<int, 3>> fill(u_faces.begin(), u_faces.end());
  for (auto& f : fill) std::sort(f.begin(), f.end());
  std::sort(fill.begin(), fill.end());

  std::deque<std::pair<int, int>> mixed;  // U-corner pairs of mixed faces, FIFO
  int next_v = nu;
  for (const auto& f : fill) {
    if (next_v >= n) break;
    int w = next_v++;
    out.v_vertices.push_back(w);
    g.add_edge(w, f[0]);
    g.add_edge(w, f[1]);
    g.add_edge(w, f[2]);
    mixed.emplace_back(f[0], f[1]);
    mixed.emplace_back(f[1], f[2]);
    mixed.emplace_back(f[0], f[2]);
  }
  while (next_v < n) {
    auto [a, b] = mixed.front();
    mixed.pop_front();
    int w = next_v++;
    out.v_vertices.push_back(w);
    g.add_edge(w, a);
    g.add_edge(w, b);
    mixed.emplace_back(a, b);
    mixed.emplace_back(a, b);
  }

  const int expected = std::min(3 * n - 6, 2 * n + 3 * t - 13);
  if (g.size() != expected)
    throw invariant_violation("turan extremal edge count off the formula");
  g.mark_planar();
  out.graph = std::move(g);
  return out;
}

/// Star K_{1,n-1}: the planar M_2-free extremal shape.
inline Graph star_graph(int n) {
  if (n < 1) throw domain_error("star needs n >= 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  g.mark_planar();
  return g;
}

/// Book: an edge 01 plus n-2 common neighbors; planar, M_3-free, 2n-3 edges.
inline Graph book_graph(int n) {
  if (n < 2) throw domain_error("book needs n >= 2");
  Graph g(n);
  g.add_edge(0, 1);
  for (int v = 2; v < n; ++v) {
    g.add_edge(0, v);
    g.add_edge(1, v);
  }
  g.mark_planar();
  return g;
}

/// Rainbow-number lower-bound coloring: embed the M_{t-1}-free extremal
/// graph in a triangulation, give its edges pairwise distinct colors, and
/// one shared extra color to every completion edge. Total colors
/// 2n+3t-15; any rainbow matching spends at most one edge on the shared
/// class and at most t-2 on the extremal part, so no rainbow M_t exists.
struct LowerBoundColoring {
  Graph host;                    // plane triangulation of order n
  EdgeColoring coloring;         // 2n+3t-15 colors
  std::vector<EdgeId> rainbow_part;  // the embedded extremal edges
  int extra_color = 0;           // shared by all completion edges (largest id)
  int n = 0;
  int t = 0;
};

inline LowerBoundColoring build_rb_lower_coloring(int n, int t) {
  if (t < 5) throw domain_error("rb lower-bound coloring needs t >= 5");
  if (n < 3 * (t - 1) - 6) throw domain_error("rb lower-bound coloring needs n >= 3t-9");

  ExtremalConstruction ext = build_turan_extremal(n, t - 1);
  CompletionResult completed = triangulate_completion(ext.graph);

  LowerBoundColoring out;
  out.n = n;
  out.t = t;
  const int m_ext = ext.graph.size();
  out.extra_color = m_ext;
  std::vector<int> colors(completed.graph.size(), m_ext);
  for (int e = 0; e < m_ext; ++e) {
    colors[e] = e;
    out.rainbow_part.push_back(e);
  }
  out.coloring = EdgeColoring::from_colors(completed.graph, std::move(colors));
  out.host = std::move(completed.graph);

  if (out.coloring.num_colors != 2 * n + 3 * t - 15)
    throw invariant_violation("lower-bound coloring color count off the formula");
  return out;
}

}  // namespace rainbowtri
