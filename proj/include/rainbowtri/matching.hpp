#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "rainbowtri/graph.hpp"

namespace rainbowtri {

/// A matching as a set of pairwise vertex-disjoint edge ids.
struct Matching {
  std::vector<EdgeId> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

namespace matchdetail {

// Edmonds blossom search over an adjacency-list view. match[v] is the
// partner of v or -1. Deterministic: greedy seed in edge-id order, roots
// scanned in vertex order.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.order()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        in_queue_(n_),
        in_blossom_(n_) {}

  std::vector<int> solve() {
    for (const Edge& e : g_.edges()) {
      if (match_[e.u] == -1 && match_[e.v] == -1) {
        match_[e.u] = e.v;
        match_[e.v] = e.u;
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] == -1) find_augmenting_path(v);
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<char> used(n_, 0);
    for (;;) {
      a = base_[a];
      used[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (used[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  bool find_augmenting_path(int root) {
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;

    std::vector<int> queue{root};
    in_queue_[root] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int u : g_.neighbors(v)) {
        if (base_[v] == base_[u] || match_[v] == u) continue;
        if (u == root || (match_[u] != -1 && parent_[match_[u]] != -1)) {
          // odd cycle: contract the blossom
          int b = lowest_common_base(v, u);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, u);
          mark_path(u, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!in_queue_[i]) {
                in_queue_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[u] == -1) {
          parent_[u] = v;
          if (match_[u] == -1) {
            augment(u);
            return true;
          }
          if (!in_queue_[match_[u]]) {
            in_queue_[match_[u]] = 1;
            queue.push_back(match_[u]);
          }
        }
      }
    }
    return false;
  }

  void augment(int u) {
    while (u != -1) {
      int pv = parent_[u];
      int next = match_[pv];
      match_[u] = pv;
      match_[pv] = u;
      u = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> in_queue_, in_blossom_;
};

}  // namespace matchdetail

/// Maximum matching (exact, Edmonds blossom). The returned witness is
/// reproducible across runs.
inline Matching max_matching(const Graph& g) {
  std::vector<int> match = matchdetail::Blossom(g).solve();
  Matching m;
  for (int v = 0; v < g.order(); ++v) {
    if (match[v] > v) m.edges.push_back(*g.edge_id(v, match[v]));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

inline bool has_matching_of_size(const Graph& g, int t) {
  if (t < 0) throw domain_error("matching size must be nonnegative");
  if (t == 0) return true;
  if (2 * t > g.order()) return false;
  return max_matching(g).size() >= t;
}

/// True iff g - v has a perfect matching for every vertex v.
inline bool is_factor_critical(const Graph& g) {
  const int n = g.order();
  if (n % 2 == 0) return false;
  for (int v = 0; v < n; ++v) {
    if (max_matching(g.without_vertex(v)).size() != (n - 1) / 2) return false;
  }
  return true;
}

/// Canonical Gallai-Edmonds decomposition. S is the neighborhood of the set
/// D of vertices missed by at least one maximum matching; the odd components
/// of G - S are the components of G[D] and are factor-critical, the even
/// components have perfect matchings, and d = (n - (q - |S|)) / 2.
struct GEDecomposition {
  std::vector<int> s;
  std::vector<std::vector<int>> odd_components;
  std::vector<std::vector<int>> even_components;
  int matching_size = 0;  // d

  int odd_count() const { return static_cast<int>(odd_components.size()); }
};

inline GEDecomposition gallai_edmonds(const Graph& g) {
  const int n = g.order();
  GEDecomposition out;
  const int d = max_matching(g).size();
  out.matching_size = d;

  // D: vertices avoidable by some maximum matching
  std::vector<char> in_d(n, 0);
  for (int v = 0; v < n; ++v) {
    if (max_matching(g.without_vertex(v)).size() == d) in_d[v] = 1;
  }
  std::vector<char> in_s(n, 0);
  for (const Edge& e : g.edges()) {
    if (in_d[e.u] && !in_d[e.v]) in_s[e.v] = 1;
    if (in_d[e.v] && !in_d[e.u]) in_s[e.u] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (in_s[v]) out.s.push_back(v);

  // components of G - S, classified by parity
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start] || in_s[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w] && !in_s[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (comp.size() % 2 == 1) {
      out.odd_components.push_back(std::move(comp));
    } else {
      out.even_components.push_back(std::move(comp));
    }
  }

  const int q = out.odd_count();
  const int s = static_cast<int>(out.s.size());
  if (2 * d != n - (q - s))
    throw invariant_violation("Gallai-Edmonds size formula failed");
  if (s > d) throw invariant_violation("Gallai-Edmonds |S| <= d failed");
  return out;
}

/// Restriction of a matching to the edges inside an induced subgraph; here
/// just a helper that checks an induced subgraph has a perfect matching.
inline bool has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && max_matching(g).size() == g.order() / 2;
}

}  // namespace rainbowtri
