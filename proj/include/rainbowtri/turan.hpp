#pragma once

#include <algorithm>
#include <atomic>
#include <list>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "rainbowtri/constructions.hpp"
#include "rainbowtri/graph.hpp"
#include "rainbowtri/matching.hpp"
#include "rainbowtri/search.hpp"
#include "rainbowtri/triangulation.hpp"

namespace rainbowtri {

struct MtFreeResult {
  std::vector<EdgeId> edges;  // maximum edge set with matching number < t
  bool exhausted = true;
  bool input_was_triangulation = true;
  SearchStats stats;
};

namespace turandetail {

/// Bounded visited-state cache with LRU eviction; keys are the sorted
/// deleted-edge-id lists. Duplicate subproblems abound because deletion
/// order does not matter.
class VisitedCache {
 public:
  explicit VisitedCache(std::size_t cap) : cap_(cap) {}

  /// Returns true if the state was already present (and refreshes it).
  bool check_and_insert(const std::string& key) {
    auto it = map_.find(key);
    if (it != map_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      return true;
    }
    order_.push_front(key);
    map_[key] = order_.begin();
    if (map_.size() > cap_) {
      map_.erase(order_.back());
      order_.pop_back();
    }
    return false;
  }

 private:
  std::size_t cap_;
  std::list<std::string> order_;
  std::unordered_map<std::string, std::list<std::string>::iterator> map_;
};

class MtFreeSearch {
 public:
  MtFreeSearch(const Graph& g, int t, const Budget& budget, long long seed_lower_bound)
      : g_(g),
        t_(t),
        budget_(budget),
        deleted_(g.size(), 0),
        visited_(1u << 20),
        prune_bound_(seed_lower_bound) {
    degsum_.resize(g.size());
    for (int e = 0; e < g.size(); ++e)
      degsum_[e] = g.degree(g.edge(e).u) + g.degree(g.edge(e).v);
  }

  MtFreeResult run() {
    MtFreeResult out;
    StatsTimer timer(stats_);
    greedy_seed();
    prune_bound_ = std::max(prune_bound_, best_value_);
    std::vector<EdgeId> sorted_deleted;
    dfs(sorted_deleted);
    out.edges.clear();
    for (int e = 0; e < g_.size(); ++e)
      if (!best_deleted_[e]) out.edges.push_back(e);
    out.exhausted = !expired_;
    out.stats = stats_;
    return out;
  }

 private:
  Graph current_graph() const {
    Graph h(g_.order());
    for (int e = 0; e < g_.size(); ++e)
      if (!deleted_[e]) h.add_edge(g_.edge(e).u, g_.edge(e).v);
    return h;
  }

  /// Maps edge ids of current_graph() back to ids in g_.
  std::vector<EdgeId> live_ids() const {
    std::vector<EdgeId> ids;
    for (int e = 0; e < g_.size(); ++e)
      if (!deleted_[e]) ids.push_back(e);
    return ids;
  }

  void record_candidate() {
    long long value = 0;
    for (int e = 0; e < g_.size(); ++e) value += !deleted_[e];
    if (value > best_value_) {
      best_value_ = value;
      best_deleted_.assign(deleted_.begin(), deleted_.end());
      prune_bound_ = std::max(prune_bound_, best_value_);
    }
  }

  /// The t branch edges out of a found matching, ordered by descending
  /// endpoint degree sum (expensive edges first).
  std::vector<EdgeId> select_branch(const Matching& m, const std::vector<EdgeId>& ids) const {
    std::vector<EdgeId> branch;
    for (EdgeId e : m.edges) branch.push_back(ids[e]);
    std::sort(branch.begin(), branch.end(), [&](EdgeId a, EdgeId b) {
      if (degsum_[a] != degsum_[b]) return degsum_[a] > degsum_[b];
      return a < b;
    });
    branch.resize(t_);
    return branch;
  }

  void dfs(std::vector<EdgeId>& sorted_deleted) {
    if (expired_) return;
    if ((++stats_.nodes & 0xff) == 0 && budget_.expired()) {
      expired_ = true;
      return;
    }
    Graph h = current_graph();
    Matching m = max_matching(h);
    if (m.size() < t_) {
      record_candidate();
      return;
    }
    long long live = g_.size() - static_cast<long long>(sorted_deleted.size());
    long long upper = live - (m.size() - t_ + 1);
    if (upper <= prune_bound_) return;

    for (EdgeId e : select_branch(m, live_ids())) {
      auto pos = std::lower_bound(sorted_deleted.begin(), sorted_deleted.end(), e);
      sorted_deleted.insert(pos, e);
      if (!visited_.check_and_insert(key(sorted_deleted))) {
        deleted_[e] = 1;
        dfs(sorted_deleted);
        deleted_[e] = 0;
      }
      sorted_deleted.erase(std::lower_bound(sorted_deleted.begin(), sorted_deleted.end(), e));
      if (expired_) return;
    }
  }

  static std::string key(const std::vector<EdgeId>& sorted_ids) {
    std::string k;
    k.reserve(sorted_ids.size() * 2);
    for (EdgeId e : sorted_ids) {
      k.push_back(static_cast<char>(e & 0xff));
      k.push_back(static_cast<char>((e >> 8) & 0xff));
    }
    return k;
  }

  /// Valid starting incumbent: repeatedly delete the heaviest edge of a
  /// maximum matching until matching number drops below t.
  void greedy_seed() {
    std::vector<char> saved = deleted_;
    for (;;) {
      Matching m = max_matching(current_graph());
      if (m.size() < t_) break;
      deleted_[select_branch(m, live_ids()).front()] = 1;
    }
    record_candidate();
    deleted_ = saved;
  }

  const Graph& g_;
  int t_;
  Budget budget_;
  std::vector<char> deleted_;
  std::vector<int> degsum_;
  VisitedCache visited_;
  long long best_value_ = -1;
  std::vector<char> best_deleted_;
  long long prune_bound_;
  bool expired_ = false;
  SearchStats stats_;
};

}  // namespace turandetail

/// Maximum-cardinality edge subset of g whose matching number is below t.
/// Exact branch-and-bound; any found M_t must lose one of its edges.
/// seed_lower_bound only prunes; the returned set is always valid.
inline MtFreeResult max_mtfree_subgraph(const Graph& g, int t,
                                        const Budget& budget = Budget::unlimited(),
                                        long long seed_lower_bound = -1) {
  if (t < 1) throw domain_error("matching bound t must be >= 1");
  if (t == 1) {
    MtFreeResult out;  // only the edgeless subgraph avoids M_1
    out.input_was_triangulation = is_triangulation(g);
    return out;
  }
  turandetail::MtFreeSearch search(g, t, budget, seed_lower_bound);
  MtFreeResult out = search.run();
  out.input_was_triangulation = is_triangulation(g);
  return out;
}

struct TuranCertificate {
  long long value = 0;   // exact when exhausted; else the witnessed lower bound
  long long lower = 0;   // witnessed lower bound
  long long upper = 0;   // valid upper bound (== value when exhausted)
  Graph witness;         // planar, M_t-free, `lower` edges
  bool exhausted = true;
  SearchStats stats;
  int n = 0;
  int t = 0;
};

/// Exact planar Turan number for matchings: the maximum over all plane
/// triangulations of order n of the maximum M_t-free edge subset (every
/// planar graph extends to a triangulation on the same vertex set).
inline TuranCertificate planar_turan_matching(int n, int t,
                                              const Budget& budget = Budget::unlimited(),
                                              int workers = 1) {
  if (n < 3) throw domain_error("planar turan needs n >= 3");
  if (t < 1) throw domain_error("planar turan needs t >= 1");
  TuranCertificate cert;
  cert.n = n;
  cert.t = t;
  SearchStats stats;
  StatsTimer timer(stats);

  if (t == 1) {
    cert.value = cert.lower = cert.upper = 0;
    cert.witness = Graph(n);
    cert.stats = stats;
    return cert;
  }
  if (n <= 2 * t - 1) {
    // matchings need 2t vertices, so every planar graph qualifies
    cert.value = cert.lower = cert.upper = 3 * n - 6;
    cert.witness = stacked_triangulation(n);
    cert.stats = stats;
    return cert;
  }

  Graph seed;
  if (t == 2) {
    seed = star_graph(n);
  } else if (t == 3) {
    seed = book_graph(n);
  } else {
    seed = build_turan_extremal(n, t).graph;
  }
  const long long seed_value = seed.size();

  std::vector<Graph> tris = generate_triangulations(n);
  AtomicIncumbent incumbent(seed_value);
  std::atomic<bool> all_exhausted{true};
  std::mutex stats_mutex;
  parallel_for_index(tris.size(), workers, [&](std::size_t i) {
    MtFreeResult r = max_mtfree_subgraph(tris[i], t, budget, incumbent.load());
    incumbent.raise(static_cast<long long>(r.edges.size()));
    if (!r.exhausted) all_exhausted = false;
    std::lock_guard<std::mutex> lock(stats_mutex);
    stats.nodes += r.stats.nodes;
  });

  cert.lower = incumbent.load();
  cert.exhausted = all_exhausted.load();
  cert.value = cert.lower;
  cert.upper = cert.exhausted ? cert.lower : 3 * n - 6;

  // deterministic witness: the seed when it attains the value, else the
  // first triangulation (in stream order) whose inner optimum reaches it
  if (seed_value == cert.lower) {
    cert.witness = seed;
  } else {
    bool found = false;
    for (const Graph& tri : tris) {
      MtFreeResult r = max_mtfree_subgraph(tri, t, budget, cert.lower - 1);
      if (static_cast<long long>(r.edges.size()) >= cert.lower) {
        Graph w(n);
        for (EdgeId e : r.edges) w.add_edge(tri.edge(e).u, tri.edge(e).v);
        w.mark_planar();
        cert.witness = std::move(w);
        found = true;
        break;
      }
    }
    if (!found) throw invariant_violation("turan witness re-derivation failed");
  }
  cert.stats = stats;
  return cert;
}

}  // namespace rainbowtri
