#pragma once

// Splitting an (r,g')-cage X into a light a-factor F and heavy rest X - F.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcage/catalog.hpp"
#include "wcage/girth.hpp"
#include "wcage/graph.hpp"
#include "wcage/moore.hpp"

namespace wcage {

struct FactorOptions {
  /// Every cycle of the factor must have at least this length (0: no constraint).
  int min_girth = 0;
  /// Require a single spanning cycle (only meaningful for a = 2).
  bool hamiltonian = false;
  std::uint64_t node_budget = 5'000'000;
  /// Extra acceptance test on complete factors; rejected ones are skipped.
  std::function<bool(const Graph&)> accept;
};

struct FactorResult {
  std::optional<Graph> factor;
  /// True when the search space was exhausted (so an empty result is a proof).
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

namespace detail {

class FactorSearch {
 public:
  FactorSearch(const Graph& x, int a, const FactorOptions& opt)
      : x_(x), a_(a), opt_(opt), n_(x.order()), adj_(x.adjacency_lists()) {}

  FactorResult run() {
    FactorResult out;
    const bool parity_ok = (static_cast<long long>(n_) * a_) % 2 == 0;
    bool degrees_ok = true;
    for (Vertex v = 0; v < n_; ++v)
      if (static_cast<int>(adj_[static_cast<std::size_t>(v)].size()) < a_) degrees_ok = false;
    if (!parity_ok || !degrees_ok || (opt_.hamiltonian && a_ != 2)) {
      out.exhausted = true;
      return out;
    }
    State s{Graph(n_), Graph(n_), std::vector<int>(static_cast<std::size_t>(n_), 0)};
    bool found = dfs(s);
    out.nodes = nodes_;
    if (found) out.factor = result_;
    out.exhausted = !found && !over_budget_;
    return out;
  }

 private:
  struct State {
    Graph in;
    Graph out;  // excluded edges
    std::vector<int> deg;
  };

  int available(const State& s, Vertex v) const {
    int c = 0;
    for (Vertex w : adj_[static_cast<std::size_t>(v)])
      if (!s.in.has_edge(v, w) && !s.out.has_edge(v, w) && s.deg[static_cast<std::size_t>(w)] < a_) ++c;
    return c;
  }

  // Length of a shortest u-v path in the factor, capped at `cap`.
  int path_length(const Graph& f, Vertex u, Vertex v, int cap) const {
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::vector<Vertex> q{u};
    dist[static_cast<std::size_t>(u)] = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      Vertex x = q[i];
      int dx = dist[static_cast<std::size_t>(x)];
      if (dx >= cap) break;
      for (Vertex y : adj_[static_cast<std::size_t>(x)])
        if (f.has_edge(x, y) && dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dx + 1;
          if (y == v) return dx + 1;
          q.push_back(y);
        }
    }
    return cap;
  }

  bool can_add(const State& s, Vertex u, Vertex v) const {
    if (s.deg[static_cast<std::size_t>(u)] >= a_ || s.deg[static_cast<std::size_t>(v)] >= a_) return false;
    if (opt_.hamiltonian) {
      // Closing a cycle is only allowed for the final edge.
      int len = path_length(s.in, u, v, n_);
      if (len < n_ && len + 1 < n_) return false;
      return true;
    }
    if (opt_.min_girth > 0) {
      int len = path_length(s.in, u, v, opt_.min_girth);
      if (len + 1 < opt_.min_girth) return false;
    }
    return true;
  }

  bool dfs(State& s) {
    if (++nodes_ > opt_.node_budget) {
      over_budget_ = true;
      return false;
    }
    // Most constrained deficient vertex.
    Vertex best = -1;
    int best_slack = 1 << 30;
    for (Vertex v = 0; v < n_; ++v) {
      int need = a_ - s.deg[static_cast<std::size_t>(v)];
      if (need == 0) continue;
      int slack = available(s, v) - need;
      if (slack < 0) return false;
      if (slack < best_slack) {
        best_slack = slack;
        best = v;
      }
    }
    if (best < 0) {
      if (opt_.accept && !opt_.accept(s.in)) return false;
      result_ = s.in;
      return true;
    }
    if (best_slack == 0) {
      // Every remaining option at `best` is forced.
      State t = s;
      for (Vertex y : adj_[static_cast<std::size_t>(best)]) {
        if (t.in.has_edge(best, y) || t.out.has_edge(best, y) || t.deg[static_cast<std::size_t>(y)] >= a_) continue;
        if (!can_add(t, best, y)) return false;
        t.in.add_edge(best, y);
        ++t.deg[static_cast<std::size_t>(best)];
        ++t.deg[static_cast<std::size_t>(y)];
      }
      return dfs(t);
    }
    Vertex w = -1;
    for (Vertex y : adj_[static_cast<std::size_t>(best)])
      if (!s.in.has_edge(best, y) && !s.out.has_edge(best, y) && s.deg[static_cast<std::size_t>(y)] < a_) {
        w = y;
        break;
      }
    if (can_add(s, best, w)) {
      State t = s;
      t.in.add_edge(best, w);
      ++t.deg[static_cast<std::size_t>(best)];
      ++t.deg[static_cast<std::size_t>(w)];
      if (dfs(t)) return true;
      if (over_budget_) return false;
    }
    State t = s;
    t.out.add_edge(best, w);
    return dfs(t);
  }

  const Graph& x_;
  int a_;
  FactorOptions opt_;
  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::uint64_t nodes_ = 0;
  bool over_budget_ = false;
  Graph result_;
};

}  // namespace detail

/// Searches X for an a-regular spanning subgraph subject to the options.
inline FactorResult find_factor(const Graph& x, int a, const FactorOptions& opt = {}) {
  if (a < 0) throw std::invalid_argument("factor degree must be nonnegative");
  return detail::FactorSearch(x, a, opt).run();
}

/// Edges of a Hamiltonian cycle given as a vertex sequence.
inline Graph cycle_edges(int n, const std::vector<Vertex>& cycle) {
  Graph f(n);
  for (std::size_t i = 0; i < cycle.size(); ++i) f.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
  return f;
}

struct SplitResult {
  WGraph graph;
  int a = 0;
  int b = 0;
  GirthValue girth;
  /// girth of the host X.
  int host_girth = 0;
  /// The window [g', 2g'], narrowed to [g'+1, 2g'] when g(F) > g'.
  int window_low = 0;
  int window_high = 0;
};

/// G = (F, X - F) for an a-factor F of X.
inline SplitResult split_cage(const Graph& x, const Graph& f) {
  if (f.order() != x.order() || !x.contains(f)) throw std::invalid_argument("F is not a subgraph of X");
  const int a = f.order() > 0 ? f.degree(0) : 0;
  if (!f.is_regular(a)) throw std::invalid_argument("F is not a regular spanning subgraph");
  SplitResult s;
  s.graph = WGraph(f, x - f);
  s.a = a;
  s.b = x.order() > 0 ? x.degree(0) - a : 0;
  if (!x.is_regular(a + s.b)) throw std::invalid_argument("X is not regular");
  s.girth = wgirth(s.graph);
  auto gx = girth(x);
  if (gx.is_finite()) {
    s.host_girth = static_cast<int>(gx.value());
    auto gf = girth(f);
    s.window_low = gf > gx ? s.host_girth + 1 : s.host_girth;
    s.window_high = 2 * s.host_girth;
    if (s.girth.is_finite() && (s.girth.value() < s.window_low || s.girth.value() > s.window_high))
      throw std::logic_error("split girth outside the expected window");
  }
  return s;
}

/// Factor whose split has weighted girth exactly `target`, if one is found.
inline FactorResult find_split_factor(const Graph& x, int a, int target, FactorOptions opt = {}) {
  auto user = opt.accept;
  opt.accept = [&x, target, user](const Graph& f) {
    if (user && !user(f)) return false;
    return wgirth(WGraph(f, x - f)) == target;
  };
  return find_factor(x, a, opt);
}

struct HamiltonianMooreReport {
  int r = 0;
  int g_prime = 0;
  long long bound = 0;
  int window_low = 0;
  int window_high = 0;
  /// Girth of the split along the Hamiltonian cycle that was used.
  GirthValue measured;
  /// For g' = 6: whether some 6-cycle has all but one edge on the cycle.
  std::optional<bool> corollary_short_cycle;
  WGraph witness;
  std::vector<Vertex> cycle;
};

namespace detail {

inline std::vector<Vertex> cycle_order(const Graph& f) {
  std::vector<Vertex> order{0};
  Vertex prev = -1, cur = 0;
  while (true) {
    Vertex next = -1;
    for (Vertex w : f.neighbors(cur))
      if (w != prev) {
        next = w;
        break;
      }
    if (next == 0 || next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// Does X have a 6-cycle using exactly five edges of the cycle C?
inline bool has_six_cycle_five_on(const Graph& x, const Graph& c) {
  const int n = x.order();
  auto ord = cycle_order(c);
  for (int i = 0; i < n; ++i) {
    Vertex u = ord[static_cast<std::size_t>(i)], v = ord[static_cast<std::size_t>((i + 5) % n)];
    if (n > 6 && x.has_edge(u, v) && !c.has_edge(u, v)) return true;
  }
  return false;
}

}  // namespace detail

/// n(2, r-2, g) <= n0(r, g') for a Hamiltonian Moore (r,g')-cage, g' even.
inline HamiltonianMooreReport hamiltonian_moore_bound(int r, int g_prime, std::uint64_t budget = 5'000'000) {
  if (r < 3 || g_prime % 2 != 0 || g_prime < 4) throw std::invalid_argument("needs r >= 3 and even g' >= 4");
  auto cage = get_cage(r, g_prime);
  const long long n0 = moore_bounds({r, 0, g_prime}).moore;
  if (!cage || cage->order != n0)
    throw std::invalid_argument("no Moore (" + std::to_string(r) + "," + std::to_string(g_prime) + ")-cage in catalog");
  Graph c;
  if (cage->hamiltonian_cycle) {
    c = cycle_edges(cage->graph.order(), *cage->hamiltonian_cycle);
  } else {
    FactorOptions opt;
    opt.hamiltonian = true;
    opt.node_budget = budget;
    auto f = find_factor(cage->graph, 2, opt);
    if (!f.factor) throw std::runtime_error("no Hamiltonian cycle found within budget");
    c = *f.factor;
  }
  HamiltonianMooreReport rep;
  rep.r = r;
  rep.g_prime = g_prime;
  rep.bound = n0;
  rep.window_low = g_prime + 1;
  rep.window_high = 3 * g_prime / 2 - 1;
  rep.witness = WGraph(c, cage->graph - c);
  rep.measured = wgirth(rep.witness);
  rep.cycle = detail::cycle_order(c);
  if (g_prime == 6) rep.corollary_short_cycle = detail::has_six_cycle_five_on(cage->graph, c);
  return rep;
}

struct CatalogSplit {
  SplitResult split;
  /// "known-factor", "hamiltonian-cycle" or "search".
  std::string factor_source;
  std::uint64_t search_nodes = 0;
};

/// Splits the catalog (r,g)-cage with a light a-factor. Known factors and the
/// stored Hamiltonian cycle are tried before searching. With `target`, only
/// splits of exactly that weighted girth are accepted.
inline std::optional<CatalogSplit> split_catalog_cage(int r, int g, int a, std::optional<int> target,
                                                      const FactorOptions& opt = {}) {
  auto cage = get_cage(r, g);
  if (!cage) throw std::invalid_argument("no (" + std::to_string(r) + "," + std::to_string(g) + ")-cage in catalog");
  const Graph& x = cage->graph;
  auto usable = [&](const Graph& f) {
    if (!f.is_regular(a)) return false;
    if (opt.min_girth > 0 && girth(f) < Extended(opt.min_girth)) return false;
    if (opt.hamiltonian && (a != 2 || detail::cycle_order(f).size() != static_cast<std::size_t>(x.order())))
      return false;
    if (opt.accept && !opt.accept(f)) return false;
    return !target || wgirth(WGraph(f, x - f)) == *target;
  };
  std::vector<Graph> candidates;
  for (const auto& f : cage->known_factors) {
    candidates.push_back(f);
    candidates.push_back(x - f);
  }
  for (const auto& f : candidates)
    if (usable(f)) return CatalogSplit{split_cage(x, f), "known-factor", 0};
  if (cage->hamiltonian_cycle && a == 2) {
    Graph f = cycle_edges(x.order(), *cage->hamiltonian_cycle);
    if (usable(f)) return CatalogSplit{split_cage(x, f), "hamiltonian-cycle", 0};
  }
  auto found = target ? find_split_factor(x, a, *target, opt) : find_factor(x, a, opt);
  if (!found.factor) return std::nullopt;
  return CatalogSplit{split_cage(x, *found.factor), "search", found.nodes};
}

}  // namespace wcage
