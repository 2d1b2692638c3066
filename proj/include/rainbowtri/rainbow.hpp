#pragma once

#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <vector>

#include "rainbowtri/coloring.hpp"
#include "rainbowtri/graph.hpp"
#include "rainbowtri/matching.hpp"
#include "rainbowtri/search.hpp"
#include "rainbowtri/triangulation.hpp"
#include "rainbowtri/turan.hpp"

namespace rainbowtri {

/// A matching whose edges carry pairwise distinct colors.
struct RainbowWitness {
  std::vector<EdgeId> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

inline constexpr int kMaxSearchEdges = 256;

namespace rbdetail {

struct Mask {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }

  friend Mask operator&(const Mask& a, const Mask& b) {
    Mask r;
    for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }

  /// Calls fn(bit) for each set bit in ascending order; fn returns false to stop.
  template <typename Fn>
  bool for_each(Fn&& fn) const {
    for (int wi = 0; wi < 4; ++wi) {
      std::uint64_t x = w[wi];
      while (x) {
        int b = std::countr_zero(x);
        if (!fn(wi * 64 + b)) return false;
        x &= x - 1;
      }
    }
    return true;
  }
};

/// Mask of all bit indices strictly above i.
inline Mask above_mask(int i) {
  Mask m;
  for (int wi = 0; wi < 4; ++wi) m.w[wi] = ~std::uint64_t{0};
  for (int j = 0; j <= i; ++j) m.clear(j);
  return m;
}

/// Exhaustive search for a surjective k-coloring of g with no rainbow M_t,
/// over canonical partitions (color ids appear in first-use order along the
/// fixed edge order). A partial assignment is pruned as soon as its
/// assigned edges contain a rainbow M_t, and when the edges that could
/// still open a fresh class cannot cover the remaining class quota.
class ArSearcher {
 public:
  ArSearcher(const Graph& g, int t, const Budget& budget)
      : g_(g), t_(t), m_(g.size()), budget_(budget), color_of_(m_, -1) {
    if (m_ > kMaxSearchEdges)
      throw domain_error("host graph too large for exhaustive coloring search");
    disjoint_.resize(m_);
    above_.resize(m_);
    for (int e = 0; e < m_; ++e) {
      above_[e] = above_mask(e);
      const Edge& ee = g.edge(e);
      for (int f = 0; f < m_; ++f) {
        if (f == e) continue;
        const Edge& ef = g.edge(f);
        if (ef.u != ee.u && ef.u != ee.v && ef.v != ee.u && ef.v != ee.v)
          disjoint_[e].set(f);
      }
    }
  }

  /// First canonical coloring found at exactly k colors, or nullopt.
  std::optional<std::vector<int>> search(int k) {
    k_ = k;
    opened_ = 0;
    assigned_ = Mask{};
    color_mask_.assign(k, Mask{});
    std::fill(color_of_.begin(), color_of_.end(), -1);
    count_mode_ = false;
    if (dfs(0)) return color_of_;
    return std::nullopt;
  }

  /// Number of canonical colorings with exactly k classes (property tests).
  std::uint64_t count_all(int k) {
    k_ = k;
    opened_ = 0;
    assigned_ = Mask{};
    color_mask_.assign(k, Mask{});
    std::fill(color_of_.begin(), color_of_.end(), -1);
    count_mode_ = true;
    found_count_ = 0;
    dfs(0);
    return found_count_;
  }

  bool expired() const { return expired_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(int i) {
    if (expired_) return false;
    if ((++nodes_ & 0xfff) == 0 && budget_.expired()) {
      expired_ = true;
      return false;
    }
    if (i == m_) {
      if (opened_ != k_) return false;
      if (count_mode_) {
        ++found_count_;
        return false;
      }
      return true;
    }
    if (opened_ + (m_ - i) < k_) return false;
    if (opened_ < k_) {
      int need = k_ - opened_, can_open = 0;
      for (int j = i; j < m_ && can_open < need; ++j)
        if (!rainbow_exists(j, -1)) ++can_open;
      if (can_open < need) return false;
    }
    const int cmax = std::min(opened_, k_ - 1);
    for (int c = 0; c <= cmax; ++c) {
      if (rainbow_exists(i, c)) continue;
      const bool fresh = (c == opened_);
      color_of_[i] = c;
      color_mask_[c].set(i);
      assigned_.set(i);
      opened_ += fresh;
      if (dfs(i + 1)) return true;
      opened_ -= fresh;
      assigned_.clear(i);
      color_mask_[c].clear(i);
      color_of_[i] = -1;
      if (expired_) return false;
    }
    return false;
  }

  /// Would edge e, colored `color` (-1 = a fresh class), complete a rainbow
  /// M_t together with already assigned edges?
  bool rainbow_exists(int e, int color) const {
    ColorSet used{};
    if (color >= 0) used.set(color);
    return rainbow_rec(assigned_ & disjoint_[e], used, t_ - 1);
  }

  struct ColorSet {
    std::array<std::uint64_t, 4> w{};
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  };

  bool rainbow_rec(Mask avail, ColorSet used, int need) const {
    if (need == 0) return true;
    if (avail.count() < need) return false;
    bool found = false;
    avail.for_each([&](int f) {
      int c = color_of_[f];
      if (used.test(c)) return true;  // continue
      ColorSet used2 = used;
      used2.set(c);
      if (rainbow_rec(avail & disjoint_[f] & above_[f], used2, need - 1)) {
        found = true;
        return false;  // stop
      }
      return true;
    });
    return found;
  }

  const Graph& g_;
  int t_;
  int m_;
  Budget budget_;
  int k_ = 0;
  int opened_ = 0;
  Mask assigned_;
  std::vector<Mask> disjoint_, above_;
  std::vector<Mask> color_mask_;
  std::vector<int> color_of_;
  bool count_mode_ = false;
  std::uint64_t found_count_ = 0;
  std::uint64_t nodes_ = 0;
  bool expired_ = false;
};

}  // namespace rbdetail

/// Exact maximum rainbow matching: branch over multi-edge color classes
/// (one edge or none each), then a plain maximum matching over the
/// remaining singleton-colored edges. Exponential only in the number of
/// multi-edge classes.
inline std::pair<int, RainbowWitness> max_rainbow_matching(const Graph& g,
                                                           const EdgeColoring& c) {
  c.validate(g);
  const int n = g.order();
  std::vector<std::vector<EdgeId>> classes(c.num_colors);
  for (int e = 0; e < g.size(); ++e) classes[c.color_of[e]].push_back(e);
  std::vector<const std::vector<EdgeId>*> multis;
  std::vector<EdgeId> singles;
  for (const auto& cls : classes) {
    if (cls.size() >= 2) {
      multis.push_back(&cls);
    } else if (cls.size() == 1) {
      singles.push_back(cls.front());
    }
  }

  auto singles_matching = [&](const std::vector<char>& used) {
    Graph h(n);
    std::vector<EdgeId> ids;
    for (EdgeId e : singles) {
      if (!used[g.edge(e).u] && !used[g.edge(e).v]) {
        h.add_edge(g.edge(e).u, g.edge(e).v);
        ids.push_back(e);
      }
    }
    Matching m = max_matching(h);
    std::vector<EdgeId> out;
    for (EdgeId e : m.edges) out.push_back(ids[e]);
    return out;
  };

  const int singles_cap = [&] {
    std::vector<char> none(n, 0);
    return static_cast<int>(singles_matching(none).size());
  }();

  int best = -1;
  std::vector<EdgeId> best_edges;
  std::vector<char> used(n, 0);
  std::vector<EdgeId> chosen;

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    int optimistic = static_cast<int>(chosen.size()) +
                     static_cast<int>(multis.size() - idx) + singles_cap;
    if (optimistic <= best) return;
    if (idx == multis.size()) {
      std::vector<EdgeId> tail = singles_matching(used);
      int total = static_cast<int>(chosen.size() + tail.size());
      if (total > best) {
        best = total;
        best_edges = chosen;
        best_edges.insert(best_edges.end(), tail.begin(), tail.end());
      }
      return;
    }
    for (EdgeId e : *multis[idx]) {
      int u = g.edge(e).u, v = g.edge(e).v;
      if (used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      chosen.push_back(e);
      rec(idx + 1);
      chosen.pop_back();
      used[u] = used[v] = 0;
    }
    rec(idx + 1);
  };
  rec(0);

  std::sort(best_edges.begin(), best_edges.end());
  return {best, RainbowWitness{std::move(best_edges)}};
}

inline bool has_rainbow_matching(const Graph& g, const EdgeColoring& c, int t) {
  if (t <= 0) return true;
  return max_rainbow_matching(g, c).first >= t;
}

using EdgeChooser = std::function<EdgeId(const std::vector<EdgeId>&)>;

/// Spanning subgraph with exactly one edge per color class; rainbow by
/// construction. Default chooser takes the lowest edge id of each class.
inline Graph representative_subgraph(const Graph& g, const EdgeColoring& c,
                                     const EdgeChooser& chooser = {}) {
  c.validate(g);
  std::vector<std::vector<EdgeId>> classes(c.num_colors);
  for (int e = 0; e < g.size(); ++e) classes[c.color_of[e]].push_back(e);
  Graph out(g.order());
  for (const auto& cls : classes) {
    EdgeId pick = chooser ? chooser(cls) : cls.front();
    out.add_edge(g.edge(pick).u, g.edge(pick).v);
  }
  return out;
}

/// Certificate for a per-graph anti-Ramsey value ar(g, M_t).
struct ARCertificate {
  long long value = 0;        // exact iff exhausted; else best witnessed bound
  long long upper_bound = 0;  // valid upper bound (== value when exhausted)
  std::optional<EdgeColoring> witness;  // `value` colors, no rainbow M_t
  bool exhausted = true;
  SearchStats stats;
  int t = 0;
};

/// Exact ar(g, M_t): maximum k admitting a surjective k-coloring with no
/// rainbow M_t. Searches k downward from the M_t-free-subgraph bound (the
/// representative subgraph of any rainbow-M_t-free coloring is M_t-free);
/// the floor is a constructive coloring: a maximum M_{t-1}-free subgraph
/// rainbow-colored plus one shared color on everything else.
inline ARCertificate anti_ramsey_value(const Graph& g, int t,
                                       const Budget& budget = Budget::unlimited()) {
  if (t < 1) throw domain_error("anti-Ramsey target must be >= 1");
  ARCertificate cert;
  cert.t = t;
  StatsTimer timer(cert.stats);
  if (max_matching(g).size() < t)
    throw domain_error("vacuous instance: host graph has no M_t");
  if (t == 1) {
    // every coloring makes a single edge rainbow, so no coloring qualifies
    cert.value = cert.upper_bound = 0;
    return cert;
  }

  MtFreeResult ub_res = max_mtfree_subgraph(g, t, budget);
  const long long upper =
      ub_res.exhausted ? static_cast<long long>(ub_res.edges.size()) : g.size();
  cert.stats.nodes += ub_res.stats.nodes;

  MtFreeResult lb_res = max_mtfree_subgraph(g, t - 1, budget);
  cert.stats.nodes += lb_res.stats.nodes;
  std::vector<int> lb_colors(g.size(), static_cast<int>(lb_res.edges.size()));
  for (std::size_t i = 0; i < lb_res.edges.size(); ++i)
    lb_colors[lb_res.edges[i]] = static_cast<int>(i);
  EdgeColoring lb_coloring = EdgeColoring::from_colors(g, std::move(lb_colors));
  const long long lower = lb_coloring.num_colors;
  if (max_rainbow_matching(g, lb_coloring).first >= t)
    throw invariant_violation("constructive lower-bound coloring admits a rainbow M_t");

  rbdetail::ArSearcher searcher(g, t, budget);
  const std::uint64_t bound_nodes = cert.stats.nodes;
  for (long long k = upper; k > lower; --k) {
    auto found = searcher.search(static_cast<int>(k));
    cert.stats.nodes = bound_nodes + searcher.nodes();
    if (searcher.expired()) {
      cert.value = lower;
      cert.upper_bound = k;
      cert.witness = std::move(lb_coloring);
      cert.exhausted = false;
      return cert;
    }
    if (found) {
      EdgeColoring w = EdgeColoring::from_colors(g, *found);
      if (w.num_colors != k || max_rainbow_matching(g, w).first >= t)
        throw invariant_violation("anti-Ramsey witness failed its recheck");
      cert.value = cert.upper_bound = k;
      cert.witness = std::move(w);
      cert.exhausted = true;
      return cert;
    }
  }
  cert.value = cert.upper_bound = lower;
  cert.witness = std::move(lb_coloring);
  cert.exhausted = true;
  return cert;
}

/// Class-level result for rb(T_n, M_t).
struct RbResult {
  long long value = 0;  // rb = 1 + max ar over qualifying triangulations
  long long lower = 0;  // witnessed: some triangulation attains lower-1 colors
  long long upper = 0;
  bool exact = true;
  Graph extremal;            // argmax triangulation
  EdgeColoring extremal_coloring;  // ar-attaining coloring of it
  int qualifying = 0;        // triangulations of order n containing M_t
  SearchStats stats;
  int n = 0;
  int t = 0;
};

/// rb(T_n, M_t) at desk scale: 1 + the maximum anti-Ramsey value over all
/// triangulations of order n that contain M_t (hosts without M_t are
/// excluded by the definition). Work is distributed per triangulation with
/// a shared monotone incumbent; the witness is re-derived sequentially so
/// reruns reproduce it byte for byte.
inline RbResult rainbow_number_class(int n, int t,
                                     const Budget& budget = Budget::unlimited(),
                                     int workers = 1) {
  if (t < 1) throw domain_error("rainbow number target must be >= 1");
  RbResult out;
  out.n = n;
  out.t = t;
  StatsTimer timer(out.stats);

  std::vector<Graph> tris = generate_triangulations(n);
  std::vector<std::size_t> qualifying;
  for (std::size_t i = 0; i < tris.size(); ++i)
    if (max_matching(tris[i]).size() >= t) qualifying.push_back(i);
  out.qualifying = static_cast<int>(qualifying.size());
  if (qualifying.empty())
    throw domain_error("vacuous class: no triangulation of order n contains M_t");

  if (t == 1) {
    out.value = out.lower = out.upper = 1;
    out.extremal = tris[qualifying.front()];
    out.extremal_coloring =
        EdgeColoring::from_colors(out.extremal, std::vector<int>(out.extremal.size(), 0));
    return out;
  }

  // Phase A: per-triangulation upper bounds and constructive lower bounds.
  const std::size_t q = qualifying.size();
  std::vector<long long> ub(q), lb(q);
  std::atomic<bool> phase_ok{true};
  std::mutex stats_mutex;
  parallel_for_index(q, workers, [&](std::size_t i) {
    const Graph& tri = tris[qualifying[i]];
    MtFreeResult u = max_mtfree_subgraph(tri, t, budget);
    ub[i] = u.exhausted ? static_cast<long long>(u.edges.size()) : tri.size();
    MtFreeResult l = max_mtfree_subgraph(tri, t - 1, budget);
    lb[i] = static_cast<long long>(l.edges.size()) + 1;
    if (!u.exhausted || !l.exhausted) phase_ok = false;
    std::lock_guard<std::mutex> lock(stats_mutex);
    out.stats.nodes += u.stats.nodes + l.stats.nodes;
  });

  AtomicIncumbent incumbent(*std::max_element(lb.begin(), lb.end()));

  // Phase B: descending-k exhaustive searches, largest upper bound first.
  std::vector<std::size_t> order(q);
  for (std::size_t i = 0; i < q; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ub[a] != ub[b]) return ub[a] > ub[b];
    return a < b;
  });
  std::atomic<bool> all_exhausted{true};
  std::mutex witness_mutex;
  long long fallback_k = -1;
  std::size_t fallback_idx = 0;
  std::vector<int> fallback_colors;
  std::atomic<std::uint64_t> nodes_total{0};
  parallel_for_index(q, workers, [&](std::size_t oi) {
    std::size_t i = order[oi];
    const Graph& tri = tris[qualifying[i]];
    if (ub[i] <= incumbent.load()) return;
    rbdetail::ArSearcher searcher(tri, t, budget);
    for (long long k = ub[i]; k > incumbent.load(); --k) {
      auto found = searcher.search(static_cast<int>(k));
      if (searcher.expired()) {
        all_exhausted = false;
        break;
      }
      if (found) {
        incumbent.raise(k);
        std::lock_guard<std::mutex> lock(witness_mutex);
        if (k > fallback_k || (k == fallback_k && i < fallback_idx)) {
          fallback_k = k;
          fallback_idx = i;
          fallback_colors = *found;
        }
        break;
      }
    }
    nodes_total += searcher.nodes();
  });
  out.stats.nodes += nodes_total.load();

  const long long best_ar = incumbent.load();
  out.exact = phase_ok.load() && all_exhausted.load();
  out.value = best_ar + 1;
  out.lower = best_ar + 1;
  long long worst_ub = best_ar;
  for (std::size_t i = 0; i < q; ++i) worst_ub = std::max(worst_ub, ub[i]);
  out.upper = out.exact ? out.value : worst_ub + 1;

  // Deterministic witness: the first triangulation in stream order that
  // attains best_ar, with the first coloring its canonical search finds.
  bool derived = false;
  for (std::size_t i = 0; i < q && !derived; ++i) {
    if (ub[i] < best_ar) continue;
    const Graph& tri = tris[qualifying[i]];
    rbdetail::ArSearcher searcher(tri, t, budget);
    auto found = searcher.search(static_cast<int>(best_ar));
    out.stats.nodes += searcher.nodes();
    if (searcher.expired()) break;
    if (found) {
      out.extremal = tri;
      out.extremal_coloring = EdgeColoring::from_colors(tri, *found);
      derived = true;
    }
  }
  if (!derived && fallback_k == best_ar) {
    out.extremal = tris[qualifying[fallback_idx]];
    out.extremal_coloring = EdgeColoring::from_colors(out.extremal, fallback_colors);
    derived = true;
  }
  if (!derived) {
    // best_ar stems from a constructive lower bound; rebuild that coloring
    std::size_t pick = q;
    for (std::size_t i = 0; i < q && pick == q; ++i)
      if (lb[i] == best_ar) pick = i;
    if (pick == q) throw invariant_violation("rb witness derivation failed");
    const Graph& tri = tris[qualifying[pick]];
    MtFreeResult l = max_mtfree_subgraph(tri, t - 1, budget);
    std::vector<int> colors(tri.size(), static_cast<int>(l.edges.size()));
    for (std::size_t j = 0; j < l.edges.size(); ++j)
      colors[l.edges[j]] = static_cast<int>(j);
    out.extremal = tri;
    out.extremal_coloring = EdgeColoring::from_colors(tri, std::move(colors));
  }
  if (max_rainbow_matching(out.extremal, out.extremal_coloring).first >= t)
    throw invariant_violation("rb extremal coloring admits a rainbow M_t");
  return out;
}

}  // namespace rainbowtri
