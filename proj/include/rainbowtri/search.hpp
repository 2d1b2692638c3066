#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace rainbowtri {

/// Soft wall-clock limit. Solvers poll it at branch boundaries; on expiry
/// they return bracketed results instead of guesses.
class Budget {
 public:
  static Budget unlimited() { return Budget{}; }

  static Budget seconds(double s) {
    Budget b;
    b.deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(s));
    return b;
  }

  bool limited() const { return deadline_.has_value(); }

  bool expired() const {
    return deadline_ && std::chrono::steady_clock::now() >= *deadline_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;

  void merge(const SearchStats& o) {
    nodes += o.nodes;
    wall_ms += o.wall_ms;
  }
};

class StatsTimer {
 public:
  explicit StatsTimer(SearchStats& stats)
      : stats_(stats), start_(std::chrono::steady_clock::now()) {}
  ~StatsTimer() {
    stats_.wall_ms +=
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
  }

 private:
  SearchStats& stats_;
  std::chrono::steady_clock::time_point start_;
};

/// Runs fn(i) for i in [0, count) across `workers` threads pulling from a
/// shared index. Each call is internally sequential; fn must synchronize any
/// shared state of its own (the usual pattern is an atomic incumbent).
inline void parallel_for_index(std::size_t count, int workers,
                               const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  std::vector<std::thread> threads;
  threads.reserve(nthreads);
  for (std::size_t i = 0; i < nthreads; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
}

/// Monotone shared incumbent for maximization searches.
class AtomicIncumbent {
 public:
  explicit AtomicIncumbent(long long initial) : value_(initial) {}

  long long load() const { return value_.load(std::memory_order_relaxed); }

  /// Raises the incumbent to at least v; returns true if v was an improvement.
  bool raise(long long v) {
    long long cur = value_.load(std::memory_order_relaxed);
    while (v > cur) {
      if (value_.compare_exchange_weak(cur, v, std::memory_order_relaxed)) return true;
    }
    return false;
  }

 private:
  std::atomic<long long> value_;
};

}  // namespace rainbowtri
