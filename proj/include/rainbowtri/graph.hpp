#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbowtri/errors.hpp"

namespace rainbowtri {

using VertexId = int;
using EdgeId = int;

/// Undirected edge with normalized endpoints (u < v).
struct Edge {
  VertexId u;
  VertexId v;
};

/// Simple undirected graph with stable vertex indices 0..n-1 and stable
/// edge ids 0..m-1 in insertion order. No loops, no parallel edges.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(n), eid_(static_cast<std::size_t>(n) * n, -1) {
    if (n < 0) throw domain_error("graph order must be nonnegative");
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  EdgeId add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw domain_error("loop edges are not allowed");
    if (has_edge(u, v)) throw domain_error("parallel edges are not allowed");
    if (u > v) std::swap(u, v);
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    eid_[cell(u, v)] = id;
    eid_[cell(v, u)] = id;
    return id;
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return eid_[cell(u, v)] >= 0;
  }

  /// Edge id for (u, v), or nullopt when the edge is absent.
  std::optional<EdgeId> edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
    EdgeId id = eid_[cell(u, v)];
    if (id < 0) return std::nullopt;
    return id;
  }

  const Edge& edge(EdgeId e) const {
    if (e < 0 || e >= size()) throw domain_error("edge id out of range");
    return edges_[static_cast<std::size_t>(e)];
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  /// The vertex of edge e that is not v.
  int other_end(EdgeId e, int v) const {
    const Edge& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw domain_error("vertex is not an endpoint of the edge");
  }

  std::vector<std::vector<int>> components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      comps.emplace_back();
      seen[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comps.back().push_back(v);
        for (int w : adj_[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
  }

  bool connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
  }

  /// Induced subgraph on `verts` (relabeled 0..k-1 in the given order).
  Graph induced(std::span<const int> verts) const {
    Graph h(static_cast<int>(verts.size()));
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      check_vertex(verts[i]);
      if (pos[verts[i]] != -1) throw domain_error("duplicate vertex in induced set");
      pos[verts[i]] = static_cast<int>(i);
    }
    for (const Edge& e : edges_) {
      if (pos[e.u] >= 0 && pos[e.v] >= 0) h.add_edge(pos[e.u], pos[e.v]);
    }
    if (planar_known_) h.planar_known_ = true;
    return h;
  }

  Graph without_vertex(int v) const {
    check_vertex(v);
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int w = 0; w < n_; ++w)
      if (w != v) keep.push_back(w);
    return induced(keep);
  }

  /// Relabel vertices: new index of v is perm[v]. Edge ids are renumbered
  /// in ascending (new u, new v) order so equal graphs compare equal.
  Graph relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw domain_error("permutation size mismatch");
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_) {
      int a = perm[e.u], b = perm[e.v];
      if (a > b) std::swap(a, b);
      es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    Graph h = from_edges(n_, es);
    h.planar_known_ = planar_known_;
    return h;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> deg(n_);
    for (int v = 0; v < n_; ++v) deg[v] = degree(v);
    return deg;
  }

  /// Marks the graph as known planar; enforces the edge-count invariant.
  void mark_planar() {
    if (n_ >= 3 && size() > 3 * n_ - 6)
      throw invariant_violation("planar flag violates m <= 3n-6");
    planar_known_ = true;
  }
  bool planar_known() const { return planar_known_; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_same(o); }

 private:
  std::size_t cell(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw domain_error("vertex index out of range");
  }

  bool edges_same(const Graph& o) const {
    if (edges_.size() != o.edges_.size()) return false;
    auto key = [](const Graph& g) {
      std::vector<std::pair<int, int>> k;
      k.reserve(g.edges_.size());
      for (const Edge& e : g.edges_) k.emplace_back(e.u, e.v);
      std::sort(k.begin(), k.end());
      return k;
    };
    return key(*this) == key(o);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<EdgeId> eid_;
  bool planar_known_ = false;
};

/// Two disjoint vertex subsets of a host graph.
struct VertexSetPair {
  std::vector<int> x;
  std::vector<int> y;

  void validate(const Graph& g) const {
    std::vector<char> in_x(g.order(), 0);
    for (int v : x) {
      if (v < 0 || v >= g.order()) throw domain_error("X vertex out of range");
      if (in_x[v]) throw domain_error("duplicate vertex in X");
      in_x[v] = 1;
    }
    std::vector<char> in_y(g.order(), 0);
    for (int v : y) {
      if (v < 0 || v >= g.order()) throw domain_error("Y vertex out of range");
      if (in_y[v]) throw domain_error("duplicate vertex in Y");
      if (in_x[v]) throw domain_error("X and Y overlap");
      in_y[v] = 1;
    }
  }
};

/// Number of edges with one end in X and the other in Y.
/// For graphs flagged planar with |X u Y| >= 3, the planar bipartite bound
/// e(X,Y) <= 2(|X|+|Y|)-4 is enforced as a sanity check.
inline int count_pair_edges(const Graph& g, const VertexSetPair& p) {
  p.validate(g);
  std::vector<char> side(g.order(), 0);
  for (int v : p.x) side[v] = 1;
  for (int v : p.y) side[v] = 2;
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != 0 && side[e.v] != 0 && side[e.u] != side[e.v]) ++count;
  }
  if (g.planar_known() && p.x.size() + p.y.size() >= 3) {
    int bound = 2 * static_cast<int>(p.x.size() + p.y.size()) - 4;
    if (count > bound)
      throw invariant_violation("planar bipartite bound e(X,Y) <= 2(|X|+|Y|)-4 violated");
  }
  return count;
}

}  // namespace rainbowtri
