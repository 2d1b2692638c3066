#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rainbowtri/graph.hpp"
#include "rainbowtri/graph6.hpp"
#include "rainbowtri/planarity.hpp"

namespace rainbowtri {

/// A plane triangulation: simple, connected, planar, with m = 3n-6 (n >= 3).
inline bool is_triangulation(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  if (g.size() != 3 * n - 6) return false;
  if (!g.connected()) return false;
  return planar_quick(g);
}

namespace canondetail {

/// Iterated degree refinement. Returns a class id per vertex; class ids are
/// isomorphism-invariant and ordered canonically (high degree first, then by
/// refinement signature).
inline std::vector<int> refine_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls(n, 0);
  {
    std::vector<std::pair<int, int>> keyed(n);  // (-degree, vertex)
    for (int v = 0; v < n; ++v) keyed[v] = {-g.degree(v), v};
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return keyed[a].first < keyed[b].first; });
    int next = -1, prev_key = 1;
    for (int v : order) {
      if (keyed[v].first != prev_key) {
        ++next;
        prev_key = keyed[v].first;
      }
      cls[v] = next;
    }
  }
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      nb.reserve(g.degree(v));
      for (int w : g.neighbors(v)) nb.push_back(cls[w]);
      std::sort(nb.begin(), nb.end());
      nb.insert(nb.begin(), cls[v]);
      sig[v] = {std::move(nb), v};
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a].first < sig[b].first; });
    std::vector<int> next_cls(n);
    int next = -1;
    const std::vector<int>* prev = nullptr;
    for (int v : order) {
      if (prev == nullptr || sig[v].first != *prev) {
        ++next;
        prev = &sig[v].first;
      }
      next_cls[v] = next;
    }
    bool stable = next_cls == cls;
    cls = std::move(next_cls);
    if (stable) break;
  }
  return cls;
}

struct CanonState {
  const Graph* g;
  std::vector<int> class_of_position;  // required class at each position
  std::vector<std::vector<int>> class_members;
  std::vector<char> used;
  std::vector<int> placed;
  std::vector<char> cur, best;  // column-major upper-triangle bits
  bool have_best = false;
  std::vector<int> best_placed;
};

inline void canon_dfs(CanonState& st, int p, bool tight) {
  const int n = st.g->order();
  if (p == n) {
    if (!st.have_best || st.cur < st.best) {
      st.best = st.cur;
      st.best_placed = st.placed;
      st.have_best = true;
    }
    return;
  }
  std::size_t offset = st.cur.size();
  for (int v : st.class_members[st.class_of_position[p]]) {
    if (st.used[v]) continue;
    for (int i = 0; i < p; ++i)
      st.cur.push_back(st.g->has_edge(st.placed[i], v) ? 1 : 0);
    bool prune = false, child_tight = false;
    if (tight && st.have_best) {
      int cmp = 0;
      for (int i = 0; i < p && cmp == 0; ++i) {
        char a = st.cur[offset + i], b = st.best[offset + i];
        cmp = a < b ? -1 : (a > b ? 1 : 0);
      }
      if (cmp > 0) prune = true;
      child_tight = (cmp == 0);
    }
    if (!prune) {
      st.used[v] = 1;
      st.placed.push_back(v);
      canon_dfs(st, p + 1, child_tight);
      st.placed.pop_back();
      st.used[v] = 0;
    }
    st.cur.resize(offset);
  }
}

}  // namespace canondetail

struct CanonResult {
  std::string form;   // graph6 of the canonical labeling
  Graph graph;        // canonically relabeled copy
  std::vector<int> permutation;  // perm[v] = canonical position of v
};

/// Canonical form: lexicographically minimal upper-triangle adjacency
/// bitstring over vertex orders that respect the refined degree classes.
/// Equal forms iff isomorphic.
inline CanonResult canonicalize(const Graph& g) {
  const int n = g.order();
  canondetail::CanonState st;
  st.g = &g;
  std::vector<int> cls = canondetail::refine_classes(g);
  int nclasses = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  st.class_members.assign(nclasses, {});
  for (int v = 0; v < n; ++v) st.class_members[cls[v]].push_back(v);
  for (int c = 0; c < nclasses; ++c)
    for (std::size_t i = 0; i < st.class_members[c].size(); ++i)
      st.class_of_position.push_back(c);
  st.used.assign(n, 0);
  canondetail::canon_dfs(st, 0, true);

  CanonResult out{std::string(), Graph(n), std::vector<int>(n)};
  for (int p = 0; p < n; ++p) out.permutation[st.best_placed[p]] = p;
  out.graph = g.relabeled(out.permutation);
  out.form = emit_graph6(out.graph);
  return out;
}

inline std::string canonical_form(const Graph& g) { return canonicalize(g).form; }
inline Graph canonical_labeling(const Graph& g) { return canonicalize(g).graph; }

/// Stacked (Apollonian-style) triangulation of order n >= 3, built from K3
/// by repeatedly placing a vertex in a face. Deterministic.
inline Graph stacked_triangulation(int n) {
  if (n < 3) throw domain_error("triangulations need order >= 3");
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  std::deque<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    auto [a, b, c] = faces.front();
    faces.pop_front();
    g.add_edge(v, a);
    g.add_edge(v, b);
    g.add_edge(v, c);
    faces.push_back({v, a, b});
    faces.push_back({v, b, c});
    faces.push_back({v, c, a});
  }
  g.mark_planar();
  return g;
}

inline constexpr int kTriangulationGenerationCap = 12;

/// Streams one canonically labeled representative per isomorphism class of
/// plane triangulations of order n, in canonical-form order. Works upward
/// from K4 by vertex splitting (the inverse of edge contraction), which
/// reaches every class; canonical forms reject duplicates.
inline void generate_triangulations(int n, const std::function<void(const Graph&)>& sink) {
  if (n < 3 || n > kTriangulationGenerationCap)
    throw domain_error("triangulation generation supports 3 <= n <= " +
                       std::to_string(kTriangulationGenerationCap));
  if (n == 3) {
    sink(canonicalize(stacked_triangulation(3)).graph);
    return;
  }
  std::vector<Graph> level{canonicalize(stacked_triangulation(4)).graph};
  for (int size = 5; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const Graph& t : level) {
      const int p = t.order();
      auto emb = planardetail::try_embed(t);
      if (!emb) throw invariant_violation("generated triangulation is not planar");
      for (int v = 0; v < p; ++v) {
        // cyclic neighbor order at v
        std::vector<int> rot;
        rot.reserve(emb->rotation[v].size());
        for (EdgeId e : emb->rotation[v]) rot.push_back(t.other_end(e, v));
        const int d = static_cast<int>(rot.size());
        for (int i = 0; i < d; ++i) {
          for (int j = i + 1; j < d; ++j) {
            // split v into v (arc rot[i..j]) and a new vertex (arc rot[j..i])
            Graph child(p + 1);
            for (const Edge& e : t.edges()) {
              if (e.u != v && e.v != v) child.add_edge(e.u, e.v);
            }
            for (int k = i; k <= j; ++k) child.add_edge(v, rot[k]);
            for (int k = j; k != i; k = (k + 1) % d) child.add_edge(p, rot[k]);
            child.add_edge(p, rot[i]);
            child.add_edge(v, p);
            CanonResult canon = canonicalize(child);
            next.emplace(std::move(canon.form), std::move(canon.graph));
          }
        }
      }
    }
    level.clear();
    for (auto& [form, graph] : next) level.push_back(std::move(graph));
  }
  for (Graph& g : level) {
    g.mark_planar();
    sink(g);
  }
}

inline std::vector<Graph> generate_triangulations(int n) {
  std::vector<Graph> out;
  generate_triangulations(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

struct CompletionResult {
  Graph graph;                   // triangulation containing every input edge
  std::vector<EdgeId> added_edges;  // ids in the output graph (original ids kept)
};

namespace tridetail {

inline void triangulate_faces(Graph& g, std::vector<EdgeId>& added) {
  auto emb = planardetail::try_embed(g);
  if (!emb) throw invariant_violation("completion lost planarity");
  auto add = [&](int a, int b) { added.push_back(g.add_edge(a, b)); };
  for (const std::vector<int>& walk : face_walks(g, *emb)) {
    const int len = static_cast<int>(walk.size());
    if (len <= 3) continue;
    // fan from the first corner whose chords are all absent
    bool fanned = false;
    for (int c = 0; c < len && !fanned; ++c) {
      bool ok = true;
      for (int k = 2; k <= len - 2 && ok; ++k)
        if (g.has_edge(walk[c], walk[(c + k) % len])) ok = false;
      if (ok) {
        for (int k = 2; k <= len - 2; ++k) add(walk[c], walk[(c + k) % len]);
        fanned = true;
      }
    }
    if (fanned) continue;
    // ear cutting; in a simple planar graph some ear chord is always free
    std::vector<int> w = walk;
    while (w.size() > 3) {
      const int s = static_cast<int>(w.size());
      bool cut = false;
      for (int p = 0; p < s && !cut; ++p) {
        int a = w[(p + s - 1) % s], b = w[(p + 1) % s];
        if (!g.has_edge(a, b)) {
          add(a, b);
          w.erase(w.begin() + p);
          cut = true;
        }
      }
      if (!cut) throw invariant_violation("face with every ear chord present");
    }
  }
}

}  // namespace tridetail

/// Completes a planar graph (n >= 3) to a plane triangulation on the same
/// vertex set: connect components, biconnect across cut vertices, then
/// triangulate every face. Original edge ids are preserved.
inline CompletionResult triangulate_completion(const Graph& g, const PlanarEmbedding& emb) {
  if (g.order() < 3) throw domain_error("completion needs order >= 3");
  for (int v = 0; v < g.order(); ++v)
    if (static_cast<int>(emb.rotation[v].size()) != g.degree(v))
      throw domain_error("embedding does not match graph");

  CompletionResult out{g, {}};
  Graph& h = out.graph;

  // connect components
  auto comps = h.components();
  for (std::size_t i = 1; i < comps.size(); ++i)
    out.added_edges.push_back(h.add_edge(comps[0][0], comps[i][0]));

  // biconnect: at a cut vertex, join two rotation-consecutive neighbors
  // lying in different blocks (such an edge is always absent)
  for (;;) {
    auto blocks = planardetail::block_decomposition(h);
    std::vector<int> block_of_edge(h.size(), -1);
    std::vector<int> blocks_at(h.order(), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::vector<char> seen(h.order(), 0);
      for (EdgeId e : blocks[b]) {
        block_of_edge[e] = static_cast<int>(b);
        for (int v : {h.edge(e).u, h.edge(e).v}) {
          if (!seen[v]) {
            seen[v] = 1;
            ++blocks_at[v];
          }
        }
      }
    }
    int cut = -1;
    for (int v = 0; v < h.order() && cut == -1; ++v) {
      if (blocks_at[v] >= 2) cut = v;
    }
    if (cut == -1) break;
    auto cur = planardetail::try_embed(h);
    if (!cur) throw invariant_violation("completion lost planarity");
    const auto& rot = cur->rotation[cut];
    bool added = false;
    for (std::size_t i = 0; i < rot.size() && !added; ++i) {
      EdgeId e1 = rot[i], e2 = rot[(i + 1) % rot.size()];
      if (block_of_edge[e1] != block_of_edge[e2]) {
        out.added_edges.push_back(
            h.add_edge(h.other_end(e1, cut), h.other_end(e2, cut)));
        added = true;
      }
    }
    if (!added) throw invariant_violation("cut vertex without a cross-block corner");
  }

  tridetail::triangulate_faces(h, out.added_edges);
  if (h.size() != 3 * h.order() - 6)
    throw invariant_violation("completion did not reach 3n-6 edges");
  h.mark_planar();
  return out;
}

inline CompletionResult triangulate_completion(const Graph& g) {
  auto pr = is_planar(g);
  if (!pr.planar) throw domain_error("completion input must be planar");
  return triangulate_completion(g, *pr.embedding);
}

}  // namespace rainbowtri
