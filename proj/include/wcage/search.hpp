#pragma once

// Exhaustive search for (a,b,g)-wgraphs of a given order.
//
// Vertices are completed one at a time in index order: when vertex v is
// processed, all of its missing light and heavy neighbours are chosen among
// the vertices w > v, after which v's rows are final. Unprocessed vertices
// only have edges to processed ones, so two unprocessed vertices with equal
// rows are interchangeable; within such a class the chosen neighbours are
// always a prefix (light first, then heavy). For v = 0 this places the light
// neighbours at 1..a and the heavy ones at a+1..a+b.
//
// Pruning:
//   girth   - all-pairs wdistances (capped at g) are maintained; an edge uv of
//             weight w is rejected when dist(u,v) + w < g.
//   degree  - residual degrees of unprocessed vertices must fit in the
//             unprocessed non-neighbours, with even residual sums.
//   moore   - as degree, but partners must also be far enough away to close
//             no short wcycle and must still have capacity of that weight.
//
// The first `split_depth` processed rows after the root are expanded into
// independent tasks; results are merged in task order, which makes the
// outcome independent of the number of workers.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "wcage/canonical.hpp"
#include "wcage/girth.hpp"
#include "wcage/graph.hpp"
#include "wcage/moore.hpp"

namespace wcage {

inline constexpr int kMaxSearchOrder = 64;

struct SearchConfig {
  int max_order = kMaxSearchOrder;
  std::uint64_t node_budget = 200'000'000;
  int worker_count = 1;
  bool prune_degree = true;
  bool prune_girth = true;
  bool prune_moore = true;
  bool deterministic = true;
  int split_depth = 2;
  /// When > 0, partial states after this many processed rows are
  /// deduplicated by canonical form within a task.
  int canon_depth = 0;
};

struct PruneStats {
  std::uint64_t degree = 0;
  std::uint64_t girth = 0;
  std::uint64_t moore = 0;
  std::uint64_t canonical = 0;

  PruneStats& operator+=(const PruneStats& o) {
    degree += o.degree;
    girth += o.girth;
    moore += o.moore;
    canonical += o.canonical;
    return *this;
  }
  friend bool operator==(const PruneStats&, const PruneStats&) = default;
};

enum class OrderStatus { found, proven_none, budget_exceeded };

struct OrderOutcome {
  OrderStatus status = OrderStatus::proven_none;
  std::optional<WGraph> witness;
  std::uint64_t nodes = 0;
  PruneStats prunes;
  /// Set when the order was excluded by parity or the lower bound.
  std::string shortcut;
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

struct SearchState {
  std::vector<Mask> light, heavy;
  std::vector<std::uint8_t> res_light, res_heavy;
  std::vector<std::uint8_t> dist;  // n*n, capped at g
  bool hit = false;                // some wcycle of weight exactly g exists
  bool short_cycle = false;        // only possible with girth pruning disabled
};

class Searcher {
 public:
  Searcher(const Params& p, int n, const SearchConfig& cfg) : p_(p), n_(n), cfg_(cfg) {}

  SearchState root() const {
    SearchState s;
    const auto nn = static_cast<std::size_t>(n_);
    s.light.assign(nn, 0);
    s.heavy.assign(nn, 0);
    s.res_light.assign(nn, static_cast<std::uint8_t>(p_.a));
    s.res_heavy.assign(nn, static_cast<std::uint8_t>(p_.b));
    s.dist.assign(nn * nn, static_cast<std::uint8_t>(cap()));
    for (std::size_t i = 0; i < nn; ++i) s.dist[i * nn + i] = 0;
    return s;
  }

  struct Task {
    SearchState state;
    int next_vertex;
  };

  enum class Stop { none, found, budget, cancelled };

  /// Expands the first levels into tasks (stops early if a leaf is hit).
  std::vector<Task> expand(const SearchState& root_state) {
    collecting_ = true;
    tasks_.clear();
    ensure_pool(1);
    pool_[0] = root_state;
    run_vertex(0, 1, 0);
    collecting_ = false;
    return std::move(tasks_);
  }

  Stop run_task(const Task& t) {
    ensure_pool(1);
    pool_[0] = t.state;
    seen_.clear();
    return run_vertex(0, 1, t.next_vertex);
  }

  void set_cap(std::uint64_t cap) { cap_ = cap; }
  void set_cancel(const std::atomic<bool>* c) { cancel_ = c; }
  std::uint64_t nodes() const { return nodes_; }
  const PruneStats& prunes() const { return prunes_; }
  const std::optional<WGraph>& witness() const { return witness_; }

 private:
  int cap() const { return p_.g; }

  void ensure_pool(std::size_t k) {
    if (pool_.size() < k) pool_.resize(k);
  }

  std::uint8_t& d(SearchState& s, int x, int y) const {
    return s.dist[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
  }
  std::uint8_t d(const SearchState& s, int x, int y) const {
    return s.dist[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
  }

  // Adds edge uv with weight w (1 or 2); false when it closes a short wcycle.
  bool add_edge(SearchState& s, int u, int v, int w) {
    int duv = d(s, u, v);
    if (duv + w < p_.g) {
      if (cfg_.prune_girth) {
        ++prunes_.girth;
        return false;
      }
      s.short_cycle = true;
    }
    if (duv + w == p_.g) s.hit = true;
    const auto uu = static_cast<std::size_t>(u), vv = static_cast<std::size_t>(v);
    if (w == 1) {
      s.light[uu] |= bit(v);
      s.light[vv] |= bit(u);
      --s.res_light[uu];
      --s.res_light[vv];
    } else {
      s.heavy[uu] |= bit(v);
      s.heavy[vv] |= bit(u);
      --s.res_heavy[uu];
      --s.res_heavy[vv];
    }
    const int g = cap();
    const auto nn = static_cast<std::size_t>(n_);
    const std::uint8_t* du = &s.dist[uu * nn];
    const std::uint8_t* dv = &s.dist[vv * nn];
    // Rows of u and v themselves change too, so snapshot them first.
    std::uint8_t rowu[kMaxSearchOrder], rowv[kMaxSearchOrder];
    std::copy(du, du + nn, rowu);
    std::copy(dv, dv + nn, rowv);
    for (std::size_t x = 0; x < nn; ++x) {
      int dxu = rowu[x], dxv = rowv[x];
      if (std::min(dxu, dxv) + w >= g) continue;
      std::uint8_t* row = &s.dist[x * nn];
      for (std::size_t y = 0; y < nn; ++y) {
        int c = std::min(dxu + w + rowv[y], dxv + w + rowu[y]);
        if (c < row[y]) row[y] = static_cast<std::uint8_t>(c);
      }
    }
    return true;
  }

  // Checks that unprocessed vertices (index >= first) can still be completed.
  bool feasible(const SearchState& s, int first) {
    if (!cfg_.prune_degree && !cfg_.prune_moore) return true;
    Mask unproc = 0;
    int sum_l = 0, sum_h = 0;
    for (int y = first; y < n_; ++y) {
      unproc |= bit(y);
      sum_l += s.res_light[static_cast<std::size_t>(y)];
      sum_h += s.res_heavy[static_cast<std::size_t>(y)];
    }
    if (cfg_.prune_degree && (sum_l % 2 != 0 || sum_h % 2 != 0)) {
      ++prunes_.degree;
      return false;
    }
    Mask want_l = 0, want_h = 0;
    for (int y = first; y < n_; ++y) {
      if (s.res_light[static_cast<std::size_t>(y)]) want_l |= bit(y);
      if (s.res_heavy[static_cast<std::size_t>(y)]) want_h |= bit(y);
    }
    for (int y = first; y < n_; ++y) {
      const auto yy = static_cast<std::size_t>(y);
      int rl = s.res_light[yy], rh = s.res_heavy[yy];
      if (rl == 0 && rh == 0) continue;
      Mask free = unproc & ~s.light[yy] & ~s.heavy[yy] & ~bit(y);
      if (cfg_.prune_degree) {
        if (std::popcount(free) < rl + rh || std::popcount(free & want_l) < rl ||
            std::popcount(free & want_h) < rh) {
          ++prunes_.degree;
          return false;
        }
      }
      if (cfg_.prune_moore) {
        Mask far_l = 0, far_h = 0;
        for (Mask m = free; m; m &= m - 1) {
          int z = std::countr_zero(m);
          int dz = d(s, y, z);
          if (dz + 1 >= p_.g) far_l |= bit(z);
          if (dz + 2 >= p_.g) far_h |= bit(z);
        }
        far_l &= want_l;
        far_h &= want_h;
        if (std::popcount(far_l) < rl || std::popcount(far_h) < rh ||
            std::popcount(far_l | far_h) < rl + rh) {
          ++prunes_.moore;
          return false;
        }
      }
    }
    return true;
  }

  bool tick(Stop& stop) {
    ++nodes_;
    if (nodes_ > cap_) {
      stop = Stop::budget;
      return false;
    }
    if (cancel_ && (nodes_ & 1023) == 0 && cancel_->load(std::memory_order_relaxed)) {
      stop = Stop::cancelled;
      return false;
    }
    return true;
  }

  Stop leaf(const SearchState& s) {
    if (!s.hit || s.short_cycle) return Stop::none;
    WGraph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) {
        if (s.light[static_cast<std::size_t>(u)] & bit(v)) g.add_light(u, v);
        else if (s.heavy[static_cast<std::size_t>(u)] & bit(v)) g.add_heavy(u, v);
      }
    if (!verify_witness(g, p_)) return Stop::none;
    witness_ = std::move(g);
    return Stop::found;
  }

  // State at pool_[si] has rows < v complete; pool_[free...] is scratch.
  Stop run_vertex(std::size_t si, std::size_t free, int v) {
    Stop stop = Stop::none;
    if (!tick(stop)) return stop;
    {
      const SearchState& s = pool_[si];
      while (v < n_ && s.res_light[static_cast<std::size_t>(v)] == 0 &&
             s.res_heavy[static_cast<std::size_t>(v)] == 0)
        ++v;
    }
    if (collecting_ && (v >= n_ || v > cfg_.split_depth)) {
      tasks_.push_back({pool_[si], v});
      return Stop::none;
    }
    if (v >= n_) return leaf(pool_[si]);
    if (cfg_.canon_depth > 0 && v == cfg_.canon_depth && !collecting_) {
      if (!seen_.insert(state_certificate(pool_[si], v)).second) {
        ++prunes_.canonical;
        return Stop::none;
      }
    }
    // Interchangeable classes among w > v, ordered by smallest member.
    std::vector<std::vector<int>> classes;
    {
      const SearchState& s = pool_[si];
      std::vector<std::pair<std::pair<Mask, Mask>, int>> keyed;
      for (int w = v + 1; w < n_; ++w)
        keyed.push_back({{s.light[static_cast<std::size_t>(w)], s.heavy[static_cast<std::size_t>(w)]}, w});
      std::vector<char> used(keyed.size(), 0);
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (used[i]) continue;
        std::vector<int> cls{keyed[i].second};
        for (std::size_t j = i + 1; j < keyed.size(); ++j)
          if (!used[j] && keyed[j].first == keyed[i].first) {
            used[j] = 1;
            cls.push_back(keyed[j].second);
          }
        classes.push_back(std::move(cls));
      }
    }
    const SearchState& s = pool_[si];
    return choose(si, free, v, classes, 0, s.res_light[static_cast<std::size_t>(v)],
                  s.res_heavy[static_cast<std::size_t>(v)]);
  }

  Stop choose(std::size_t si, std::size_t free, int v, const std::vector<std::vector<int>>& classes,
              std::size_t ci, int need_l, int need_h) {
    if (need_l == 0 && need_h == 0) {
      if (!feasible(pool_[si], v + 1)) return Stop::none;
      return run_vertex(si, free, v + 1);
    }
    if (ci == classes.size()) return Stop::none;
    {
      std::size_t room = 0;
      for (std::size_t k = ci; k < classes.size(); ++k) room += classes[k].size();
      if (room < static_cast<std::size_t>(need_l + need_h)) return Stop::none;
    }
    Stop stop = Stop::none;
    if (!tick(stop)) return stop;
    const auto& cls = classes[ci];
    const int size = static_cast<int>(cls.size());
    // A class member must still have capacity of the requested weight;
    // members of a class share their residual degrees.
    const SearchState& base = pool_[si];
    const int member_l = base.res_light[static_cast<std::size_t>(cls[0])];
    const int member_h = base.res_heavy[static_cast<std::size_t>(cls[0])];
    int max_l = member_l > 0 ? std::min(need_l, size) : 0;
    int max_h_total = member_h > 0 ? need_h : 0;

    // Light chain: slot free+k-1 holds k light edges to cls[0..k).
    std::size_t top = free;
    int lmax = 0;
    ensure_pool(free + static_cast<std::size_t>(max_l) + 1);
    for (int k = 0; k < max_l; ++k) {
      std::size_t src = (k == 0) ? si : free + static_cast<std::size_t>(k) - 1;
      std::size_t dst = free + static_cast<std::size_t>(k);
      pool_[dst] = pool_[src];
      if (!add_edge(pool_[dst], v, cls[static_cast<std::size_t>(k)], 1)) break;
      ++lmax;
    }
    top = free + static_cast<std::size_t>(lmax);
    for (int l = lmax; l >= 0; --l) {
      std::size_t lstate = (l == 0) ? si : free + static_cast<std::size_t>(l) - 1;
      int max_h = std::min(max_h_total, size - l);
      ensure_pool(top + static_cast<std::size_t>(max_h) + 1);
      int hmax = 0;
      for (int k = 0; k < max_h; ++k) {
        std::size_t src = (k == 0) ? lstate : top + static_cast<std::size_t>(k) - 1;
        std::size_t dst = top + static_cast<std::size_t>(k);
        pool_[dst] = pool_[src];
        if (!add_edge(pool_[dst], v, cls[static_cast<std::size_t>(l + k)], 2)) break;
        ++hmax;
      }
      std::size_t next_free = top + static_cast<std::size_t>(hmax);
      for (int h = hmax; h >= 0; --h) {
        std::size_t hstate = (h == 0) ? lstate : top + static_cast<std::size_t>(h) - 1;
        stop = choose(hstate, next_free, v, classes, ci + 1, need_l - l, need_h - h);
        if (stop != Stop::none) return stop;
      }
    }
    return Stop::none;
  }

  std::string state_certificate(const SearchState& s, int v) const {
    WGraph g(n_);
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y) {
        if (s.light[static_cast<std::size_t>(x)] & bit(y)) g.add_light(x, y);
        else if (s.heavy[static_cast<std::size_t>(x)] & bit(y)) g.add_heavy(x, y);
      }
    std::vector<int> colors(static_cast<std::size_t>(n_), 0);
    for (int x = 0; x < v; ++x) colors[static_cast<std::size_t>(x)] = 1;
    return canonical_form(g, colors).certificate;
  }

  Params p_;
  int n_;
  SearchConfig cfg_;
  std::vector<SearchState> pool_;
  std::uint64_t nodes_ = 0;
  std::uint64_t cap_ = UINT64_MAX;
  const std::atomic<bool>* cancel_ = nullptr;
  PruneStats prunes_;
  std::optional<WGraph> witness_;
  bool collecting_ = false;
  std::vector<Task> tasks_;
  std::set<std::string> seen_;
};

}  // namespace detail

/// Decides whether an (a,b,g)-wgraph on exactly n vertices exists.
inline OrderOutcome exists_wgraph(const Params& p, int n, const SearchConfig& cfg) {
  OrderOutcome out;
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  if (p.g < 3 || p.a < 0 || p.b < 0) throw std::invalid_argument("invalid parameters " + to_string(p));
  if ((static_cast<long long>(p.a) * n) % 2 != 0 || (static_cast<long long>(p.b) * n) % 2 != 0) {
    out.shortcut = "parity";
    return out;
  }
  if (!wcycle_exists(p)) {
    out.shortcut = "nonexistent";
    return out;
  }
  if (n < moore_bounds(p).combined) {
    out.shortcut = "lower-bound";
    return out;
  }
  if (n > kMaxSearchOrder || n > cfg.max_order)
    throw std::invalid_argument("order " + std::to_string(n) + " exceeds the search limit");

  detail::Searcher expander(p, n, cfg);
  expander.set_cap(cfg.node_budget);
  auto tasks = expander.expand(expander.root());
  out.nodes = expander.nodes();
  out.prunes = expander.prunes();
  if (out.nodes > cfg.node_budget) {
    out.status = OrderStatus::budget_exceeded;
    out.nodes = cfg.node_budget + 1;
    return out;
  }
  const std::uint64_t remaining = cfg.node_budget - out.nodes;

  struct TaskResult {
    detail::Searcher::Stop stop = detail::Searcher::Stop::none;
    std::uint64_t nodes = 0;
    PruneStats prunes;
    std::optional<WGraph> witness;
    bool done = false;
  };
  std::vector<TaskResult> results(tasks.size());

  auto run_one = [&](std::size_t i, const std::atomic<bool>* cancel) {
    detail::Searcher s(p, n, cfg);
    s.set_cap(remaining);
    s.set_cancel(cancel);
    auto stop = s.run_task(tasks[i]);
    results[i].stop = stop;
    results[i].nodes = s.nodes();
    results[i].prunes = s.prunes();
    results[i].witness = s.witness();
    results[i].done = true;
  };

  const int workers = std::max(1, cfg.worker_count);
  if (workers == 1 || tasks.size() <= 1) {
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      detail::Searcher s(p, n, cfg);
      s.set_cap(remaining - std::min(used, remaining));
      auto stop = s.run_task(tasks[i]);
      results[i] = {stop, s.nodes(), s.prunes(), s.witness(), true};
      used += s.nodes();
      if (stop != detail::Searcher::Stop::none) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_stop{tasks.size()};
    std::vector<std::unique_ptr<std::atomic<bool>>> cancels;
    for (std::size_t i = 0; i < tasks.size(); ++i) cancels.push_back(std::make_unique<std::atomic<bool>>(false));
    std::mutex mu;
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        if (i > first_stop.load()) continue;
        run_one(i, cancels[i].get());
        if (results[i].stop == detail::Searcher::Stop::found ||
            results[i].stop == detail::Searcher::Stop::budget) {
          std::lock_guard<std::mutex> lock(mu);
          if (i < first_stop.load()) {
            first_stop.store(i);
            for (std::size_t j = i + 1; j < tasks.size(); ++j) cancels[j]->store(true);
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Deterministic merge in task order.
  std::uint64_t total = out.nodes;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& r = results[i];
    if (!r.done) break;
    if (r.stop == detail::Searcher::Stop::cancelled) break;
    out.prunes += r.prunes;
    total += r.nodes;
    if (total > cfg.node_budget || r.stop == detail::Searcher::Stop::budget) {
      out.status = OrderStatus::budget_exceeded;
      out.nodes = cfg.node_budget + 1;
      return out;
    }
    if (r.stop == detail::Searcher::Stop::found) {
      out.status = OrderStatus::found;
      out.witness = r.witness;
      out.nodes = total;
      return out;
    }
  }
  out.status = OrderStatus::proven_none;
  out.nodes = total;
  return out;
}

enum class SearchStatus { exact, lower_only, nonexistent, budget_exceeded };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::exact: return "EXACT";
    case SearchStatus::lower_only: return "LOWER_ONLY";
    case SearchStatus::nonexistent: return "NONEXISTENT";
    case SearchStatus::budget_exceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

struct ExhaustedOrder {
  int n = 0;
  std::uint64_t nodes = 0;
  friend bool operator==(const ExhaustedOrder&, const ExhaustedOrder&) = default;
};

struct SearchOutcome {
  Params params;
  SearchStatus status = SearchStatus::lower_only;
  /// n(a,b,g) when EXACT or NONEXISTENT; the proven lower bound otherwise.
  Extended value;
  long long lower_bound = 0;  // combined Moore-like / trivial bound
  std::optional<WGraph> witness;
  std::vector<ExhaustedOrder> exhausted_orders;
  std::uint64_t nodes = 0;
  PruneStats prunes;
  double wall_ms = 0;
};

/// Determines n(a,b,g) by searching orders upward from the lower bound.
inline SearchOutcome find_wcage(const Params& p, const SearchConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out;
  out.params = p;
  auto finish = [&] {
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
  };
  if (!wcycle_exists(p)) {
    out.status = SearchStatus::nonexistent;
    out.value = Extended::infinite();
    return finish();
  }
  auto bounds = moore_bounds(p);
  out.lower_bound = bounds.combined;
  std::uint64_t used = 0;
  const int limit = std::min(cfg.max_order, kMaxSearchOrder);
  for (long long n = bounds.combined; n <= limit; ++n) {
    if ((p.a * n) % 2 != 0 || (p.b * n) % 2 != 0) continue;
    SearchConfig c = cfg;
    c.node_budget = cfg.node_budget - std::min(used, cfg.node_budget);
    auto r = exists_wgraph(p, static_cast<int>(n), c);
    used += r.nodes;
    out.nodes = used;
    out.prunes += r.prunes;
    if (r.status == OrderStatus::found) {
      out.status = SearchStatus::exact;
      out.value = Extended(n);
      out.witness = canonical_relabeling(*r.witness);
      return finish();
    }
    if (r.status == OrderStatus::budget_exceeded) {
      out.status = SearchStatus::budget_exceeded;
      out.value = Extended(n);
      out.nodes = std::min(used, cfg.node_budget + 1);
      return finish();
    }
    out.exhausted_orders.push_back({static_cast<int>(n), r.nodes});
  }
  out.status = SearchStatus::lower_only;
  out.value = Extended(std::max<long long>(limit + 1, bounds.combined));
  return finish();
}

}  // namespace wcage
