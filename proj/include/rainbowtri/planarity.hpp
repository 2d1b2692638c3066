#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rainbowtri/graph.hpp"

namespace rainbowtri {

/// Combinatorial embedding: for each vertex a cyclic order of incident edge
/// ids. Faces are derived on demand by face tracing.
struct PlanarEmbedding {
  std::vector<std::vector<EdgeId>> rotation;
};

struct KuratowskiWitness {
  enum class Kind { k5, k33 };
  Kind kind;
  std::vector<EdgeId> edges;  // edge ids of the subdivision in the input graph
  std::vector<int> branch_vertices;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<PlanarEmbedding> embedding;
  std::optional<KuratowskiWitness> witness;
};

/// Face walks of an embedding as directed vertex cycles. Every directed edge
/// lies on exactly one walk, so each undirected edge shows up twice overall
/// (possibly twice in the same walk, for bridges).
inline std::vector<std::vector<int>> face_walks(const Graph& g, const PlanarEmbedding& emb) {
  const int n = g.order();
  const int m = g.size();
  // position of edge e in rotation[v]
  std::vector<std::vector<int>> pos(n);
  for (int v = 0; v < n; ++v) {
    pos[v].assign(m, -1);
    for (std::size_t i = 0; i < emb.rotation[v].size(); ++i)
      pos[v][emb.rotation[v][i]] = static_cast<int>(i);
  }
  std::vector<char> visited(static_cast<std::size_t>(m) * 2, 0);  // (e, dir): dir 0 = u->v
  std::vector<std::vector<int>> walks;
  for (int e0 = 0; e0 < m; ++e0) {
    for (int dir0 = 0; dir0 < 2; ++dir0) {
      if (visited[static_cast<std::size_t>(e0) * 2 + dir0]) continue;
      std::vector<int> walk;
      int e = e0, dir = dir0;
      do {
        visited[static_cast<std::size_t>(e) * 2 + dir] = 1;
        int tail = dir == 0 ? g.edge(e).u : g.edge(e).v;
        int head = g.other_end(e, tail);
        walk.push_back(tail);
        int idx = pos[head][e];
        const auto& rot = emb.rotation[head];
        EdgeId next = rot[(idx + 1) % rot.size()];
        e = next;
        dir = (g.edge(next).u == head) ? 0 : 1;
      } while (!visited[static_cast<std::size_t>(e) * 2 + dir]);
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

namespace planardetail {

struct Bitset {
  std::vector<std::uint64_t> w;
  explicit Bitset(int n) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
};

/// Biconnected components as lists of edge ids (bridge edges come out as
/// singleton blocks). Deterministic order.
inline std::vector<std::vector<EdgeId>> block_decomposition(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> stack;
  std::vector<std::vector<EdgeId>> blocks;
  int timer = 0;

  std::function<void(int, EdgeId)> dfs = [&](int v, EdgeId parent_edge) {
    disc[v] = low[v] = timer++;
    for (int w : g.neighbors(v)) {
      EdgeId e = *g.edge_id(v, w);
      if (e == parent_edge) continue;
      if (disc[w] == -1) {
        stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          blocks.emplace_back();
          for (;;) {
            EdgeId top = stack.back();
            stack.pop_back();
            blocks.back().push_back(top);
            if (top == e) break;
          }
          std::sort(blocks.back().begin(), blocks.back().end());
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] == -1) dfs(v, -1);
  return blocks;
}

/// Demoucron-Malgrange-Pertuiset path addition on one 2-connected block
/// (>= 3 edges). Returns directed face walks, or nullopt if nonplanar.
inline std::optional<std::vector<std::vector<int>>> dmp_block_faces(
    const Graph& g, const std::vector<EdgeId>& block_edges) {
  const int n = g.order();
  std::vector<char> in_block_edge(g.size(), 0);
  std::vector<char> in_block_vertex(n, 0);
  for (EdgeId e : block_edges) {
    in_block_edge[e] = 1;
    in_block_vertex[g.edge(e).u] = 1;
    in_block_vertex[g.edge(e).v] = 1;
  }
  int nb = 0;
  for (int v = 0; v < n; ++v) nb += in_block_vertex[v];
  if (nb >= 3 && static_cast<int>(block_edges.size()) > 3 * nb - 6) return std::nullopt;

  // initial cycle via DFS
  std::vector<int> cycle;
  {
    std::vector<int> parent(n, -2);
    int start = g.edge(block_edges[0]).u;
    std::function<bool(int, int)> dfs = [&](int v, int from) -> bool {
      parent[v] = from;
      for (int w : g.neighbors(v)) {
        if (!in_block_edge[*g.edge_id(v, w)]) continue;
        if (w == from) continue;
        if (parent[w] != -2) {
          // first non-tree edge; in a 2-connected block no subtree can
          // finish before one appears, so w lies on the current path
          cycle.clear();
          for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
          cycle.push_back(w);
          return true;
        }
        if (dfs(w, v)) return true;
      }
      return false;
    };
    if (!dfs(start, -1)) throw invariant_violation("2-connected block without a cycle");
  }

  std::vector<char> emb_vertex(n, 0), emb_edge(g.size(), 0);
  int remaining = static_cast<int>(block_edges.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    emb_vertex[cycle[i]] = 1;
    EdgeId e = *g.edge_id(cycle[i], cycle[(i + 1) % cycle.size()]);
    emb_edge[e] = 1;
    --remaining;
  }

  struct Face {
    std::vector<int> walk;  // directed simple vertex cycle
    Bitset members;
    bool alive = true;
    Face(std::vector<int> w, int n) : walk(std::move(w)), members(n) {
      for (int v : walk) members.set(v);
    }
  };
  std::vector<Face> faces;
  std::vector<std::vector<int>> faces_at(n);  // vertex -> face ids (lazily filtered)
  auto add_face = [&](std::vector<int> walk) {
    int id = static_cast<int>(faces.size());
    faces.emplace_back(std::move(walk), n);
    for (int v : faces[id].walk) faces_at[v].push_back(id);
  };
  add_face(cycle);
  {
    std::vector<int> rev(cycle.rbegin(), cycle.rend());
    add_face(std::move(rev));
  }

  struct Bridge {
    std::vector<int> attachments;  // sorted embedded vertices
    EdgeId chord = -1;             // >= 0 for single-chord bridges
    int component_seed = -1;       // smallest unembedded vertex for path search
  };

  while (remaining > 0) {
    // --- collect bridges ---
    std::vector<Bridge> bridges;
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
      if (!in_block_vertex[s] || emb_vertex[s] || comp[s] != -1) continue;
      int c = ncomp++;
      std::vector<int> stack{s};
      comp[s] = c;
      Bridge b;
      b.component_seed = s;
      std::vector<char> att(n, 0);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
          if (!in_block_edge[*g.edge_id(v, w)]) continue;
          if (emb_vertex[w]) {
            att[w] = 1;
          } else if (comp[w] == -1) {
            comp[w] = c;
            stack.push_back(w);
          }
        }
      }
      for (int v = 0; v < n; ++v)
        if (att[v]) b.attachments.push_back(v);
      bridges.push_back(std::move(b));
    }
    for (EdgeId e : block_edges) {
      if (emb_edge[e]) continue;
      const Edge& ed = g.edge(e);
      if (emb_vertex[ed.u] && emb_vertex[ed.v]) {
        Bridge b;
        b.chord = e;
        b.attachments = {std::min(ed.u, ed.v), std::max(ed.u, ed.v)};
        bridges.push_back(std::move(b));
      }
    }
    if (bridges.empty()) throw invariant_violation("unembedded edges without bridges");

    // --- admissibility: pick the bridge with the fewest admissible faces ---
    int chosen_bridge = -1, chosen_face = -1, chosen_count = 3;
    for (std::size_t bi = 0; bi < bridges.size(); ++bi) {
      const Bridge& b = bridges[bi];
      int count = 0, first_face = -1;
      int a0 = b.attachments.front();
      for (int fid : faces_at[a0]) {
        if (!faces[fid].alive) continue;
        bool ok = true;
        for (int a : b.attachments)
          if (!faces[fid].members.test(a)) {
            ok = false;
            break;
          }
        if (ok) {
          if (first_face == -1) first_face = fid;
          if (++count >= 2) break;
        }
      }
      if (count == 0) return std::nullopt;  // stuck bridge: nonplanar
      if (count < chosen_count) {
        chosen_count = count;
        chosen_bridge = static_cast<int>(bi);
        chosen_face = first_face;
        if (count == 1) break;  // forced move
      }
    }

    // --- find an embeddable path through the chosen bridge ---
    const Bridge& b = bridges[chosen_bridge];
    std::vector<int> path;
    if (b.chord >= 0) {
      path = {b.attachments[0], b.attachments[1]};
    } else {
      int a = b.attachments.front();
      std::vector<char> is_att(n, 0);
      for (int x : b.attachments) is_att[x] = 1;
      int c = comp[b.component_seed];
      std::vector<int> parent(n, -1);
      std::vector<int> queue;
      for (int w : g.neighbors(a)) {
        if (comp[w] == c && in_block_edge[*g.edge_id(a, w)] && parent[w] == -1) {
          parent[w] = a;
          queue.push_back(w);
        }
      }
      int reached = -1, exit_att = -1;
      for (std::size_t qi = 0; qi < queue.size() && reached == -1; ++qi) {
        int v = queue[qi];
        for (int w : g.neighbors(v)) {
          if (!in_block_edge[*g.edge_id(v, w)]) continue;
          if (emb_vertex[w]) {
            if (is_att[w] && w != a) {
              reached = v;
              exit_att = w;
              break;
            }
          } else if (parent[w] == -1) {
            parent[w] = v;
            queue.push_back(w);
          }
        }
      }
      if (reached == -1) throw invariant_violation("bridge path search failed");
      path.push_back(exit_att);
      for (int x = reached; x != a; x = parent[x]) path.push_back(x);
      path.push_back(a);
      std::reverse(path.begin(), path.end());  // a ... exit_att
    }

    // --- split the face ---
    Face& f = faces[chosen_face];
    std::vector<int>& w = f.walk;
    int ia = -1, ib = -1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == path.front()) ia = static_cast<int>(i);
      if (w[i] == path.back()) ib = static_cast<int>(i);
    }
    if (ia < 0 || ib < 0) throw invariant_violation("path endpoints missing from face");
    const int L = static_cast<int>(w.size());
    std::vector<int> face1, face2;
    for (int i = ia;; i = (i + 1) % L) {
      face1.push_back(w[i]);
      if (i == ib) break;
    }
    for (std::size_t i = path.size() - 2; i >= 1; --i) face1.push_back(path[i]);
    for (int i = ib;; i = (i + 1) % L) {
      face2.push_back(w[i]);
      if (i == ia) break;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) face2.push_back(path[i]);
    f.alive = false;
    add_face(std::move(face1));
    add_face(std::move(face2));

    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      emb_edge[*g.edge_id(path[i], path[i + 1])] = 1;
      --remaining;
    }
    for (int v : path) emb_vertex[v] = 1;
  }

  std::vector<std::vector<int>> out;
  for (Face& f : faces)
    if (f.alive) out.push_back(std::move(f.walk));
  return out;
}

/// Derives the rotation (cyclic neighbor order) at each block vertex from
/// the directed face walks of that block.
inline void rotations_from_faces(const Graph& g, const std::vector<std::vector<int>>& walks,
                                 std::vector<std::vector<EdgeId>>& parts_out) {
  const int n = g.order();
  // succ[v]: arriving from x at v, the walk leaves toward succ[v][x]
  std::vector<std::vector<std::pair<int, int>>> succ(n);
  for (const auto& w : walks) {
    const int L = static_cast<int>(w.size());
    for (int i = 0; i < L; ++i) {
      int x = w[i], y = w[(i + 1) % L], z = w[(i + 2) % L];
      succ[y].emplace_back(x, z);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (succ[v].empty()) continue;
    std::sort(succ[v].begin(), succ[v].end());
    const int d = static_cast<int>(succ[v].size());
    auto next = [&](int x) {
      auto it = std::lower_bound(succ[v].begin(), succ[v].end(), std::make_pair(x, -1));
      if (it == succ[v].end() || it->first != x)
        throw invariant_violation("face walks give no rotation successor");
      return it->second;
    };
    std::vector<EdgeId> cycle;
    int start = succ[v][0].first;
    int x = start;
    for (int steps = 0; steps < d; ++steps) {
      cycle.push_back(*g.edge_id(v, x));
      x = next(x);
    }
    if (x != start || static_cast<int>(cycle.size()) != d)
      throw invariant_violation("face walks do not define a single rotation cycle");
    parts_out[v].insert(parts_out[v].end(), cycle.begin(), cycle.end());
  }
}

inline std::optional<PlanarEmbedding> try_embed(const Graph& g) {
  const int n = g.order();
  if (n >= 3 && g.size() > 3 * n - 6) return std::nullopt;
  std::vector<std::vector<EdgeId>> rotation(n);
  for (const auto& block : block_decomposition(g)) {
    if (block.size() == 1) {
      const Edge& e = g.edge(block[0]);
      rotation[e.u].push_back(block[0]);
      rotation[e.v].push_back(block[0]);
      continue;
    }
    auto walks = dmp_block_faces(g, block);
    if (!walks) return std::nullopt;
    rotations_from_faces(g, *walks, rotation);
  }
  return PlanarEmbedding{std::move(rotation)};
}

}  // namespace planardetail

/// Boolean planarity test (no witness extraction).
inline bool planar_quick(const Graph& g) { return planardetail::try_embed(g).has_value(); }

namespace planardetail {

/// Reduces a nonplanar graph to an edge-minimal nonplanar subgraph, which is
/// necessarily a K5 or K3,3 subdivision.
inline KuratowskiWitness extract_kuratowski(const Graph& g) {
  std::vector<EdgeId> surviving(g.size());
  for (int e = 0; e < g.size(); ++e) surviving[e] = e;

  auto build = [&](const std::vector<EdgeId>& ids, EdgeId skip) {
    Graph h(g.order());
    for (EdgeId e : ids) {
      if (e == skip) continue;
      h.add_edge(g.edge(e).u, g.edge(e).v);
    }
    return h;
  };

  std::size_t i = 0;
  while (i < surviving.size()) {
    Graph h = build(surviving, surviving[i]);
    if (!planar_quick(h)) {
      surviving.erase(surviving.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }

  std::vector<int> deg(g.order(), 0);
  for (EdgeId e : surviving) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::vector<int> branch;
  int deg3 = 0, deg4 = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (deg[v] >= 3) branch.push_back(v);
    if (deg[v] == 3) ++deg3;
    if (deg[v] == 4) ++deg4;
  }
  KuratowskiWitness w;
  w.edges = std::move(surviving);
  w.branch_vertices = std::move(branch);
  if (w.branch_vertices.size() == 5 && deg4 == 5) {
    w.kind = KuratowskiWitness::Kind::k5;
  } else if (w.branch_vertices.size() == 6 && deg3 == 6) {
    w.kind = KuratowskiWitness::Kind::k33;
  } else {
    throw invariant_violation("minimal nonplanar subgraph is not a Kuratowski subdivision");
  }
  return w;
}

}  // namespace planardetail

/// Planarity with a certificate either way: a rotation system, or a
/// Kuratowski subdivision witness.
inline PlanarityResult is_planar(const Graph& g) {
  PlanarityResult r;
  auto emb = planardetail::try_embed(g);
  if (emb) {
    r.planar = true;
    r.embedding = std::move(emb);
  } else {
    r.planar = false;
    r.witness = planardetail::extract_kuratowski(g);
  }
  return r;
}

}  // namespace rainbowtri
