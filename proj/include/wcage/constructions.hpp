#pragma once

// Explicit (a,b,g)-wgraph constructions: the optimal families for girth 3,
// 4, 5 and 6, the generic two-step extension builder, and the upper-bound
// builders that start from an ordinary cage.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcage/catalog.hpp"
#include "wcage/extension.hpp"
#include "wcage/factorization.hpp"
#include "wcage/girth.hpp"
#include "wcage/graph.hpp"
#include "wcage/moore.hpp"
#include "wcage/search.hpp"

namespace wcage {

/// A verified wgraph with the builder and case that produced it.
struct Construction {
  WGraph graph;
  std::string builder;
  std::string case_tag;
  Params params;
};

/// Raised when a builder needs an auxiliary graph it cannot obtain.
class UnsupportedParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Construction finish(WGraph g, const char* builder, std::string tag, const Params& p) {
  auto bad = witness_violations(g, p);
  if (!bad.empty())
    throw std::logic_error(std::string(builder) + " " + tag + " produced an invalid " + to_string(p) +
                           "-wgraph: " + bad.front());
  return {std::move(g), builder, std::move(tag), p};
}

/// Copies `src` onto vertices offset..offset+|src|-1 of `dst`.
inline void embed(Graph& dst, const Graph& src, int offset) {
  for (auto [u, v] : src.edges()) dst.add_edge(offset + u, offset + v);
}

/// Joins every vertex of block A to every vertex of block B.
inline void join(Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  for (int u : a)
    for (int v : b) g.add_edge(u, v);
}

/// s-regular bipartite graph between equal-size blocks: s cyclic matchings.
inline void cyclic_matchings(Graph& g, const std::vector<int>& a, const std::vector<int>& b, int s) {
  if (a.size() != b.size() || s > static_cast<int>(a.size()))
    throw std::logic_error("cyclic matchings need equal blocks of size >= s");
  const int m = static_cast<int>(a.size());
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < m; ++j) g.add_edge(a[static_cast<std::size_t>(j)], b[static_cast<std::size_t>((j + i) % m)]);
}

/// A b-regular graph on k vertices (b < k, kb even) from the factorization lemmas.
inline Graph regular_by_factors(int k, int b) {
  if (b == 0) return Graph(k);
  if (b == k - 1) return cages::complete(k);
  if (k % 2 == 0) return one_factorization(k).union_of(0, b - 1);
  if (b % 2 != 0) throw std::logic_error("odd degree on an odd number of vertices");
  return two_factorization(k).union_of(0, b / 2 - 1);
}

}  // namespace detail

// ---------------------------------------------------------------- values

/// n(a,b,3) as given by the girth-3 characterization.
inline Extended g3_value(int a, int b) {
  if (a < 2) return Extended::infinite();
  if (a == 2) return Extended((b == 1 || b == 2) ? 6 : a + b + 1);
  return Extended((a % 2 == 1 && b % 2 == 1) ? a + b + 2 : a + b + 1);
}

/// n(a,b,4) as given by the girth-4 characterization.
inline Extended g4_value(int a, int b) {
  if (a < 2) return Extended::infinite();
  if (a == 2) return Extended(b == 0 ? 4 : a + b + 1);
  const bool a_odd = a % 2 == 1, b_odd = b % 2 == 1;
  if (a > b) return Extended((a_odd && b_odd) ? 2 * a + 2 : 2 * a);
  if (a_odd != b_odd) return Extended(a + b + 1);
  if (a_odd) return Extended(a + b + 2);
  return Extended(2 * b <= 3 * a - 4 ? a + b + 2 : a + b + 1);
}

/// n(a,b,g) for a in {1,2} and g in {5,6}; empty outside those cases.
inline std::optional<long long> g56_value(int a, int b, int g) {
  if (g == 5 && a == 1 && b >= 2) return b % 2 == 0 ? b + 2 : b + 3;
  if (g == 5 && a == 2 && b >= 0) return b + 5;
  if (g == 6 && a == 1 && b >= 1) return 2LL * b + 2;
  if (g == 6 && a == 2 && b >= 0) return 2LL * b + 6;
  return std::nullopt;
}

// ---------------------------------------------------------------- girth 3

inline std::optional<Construction> construct_g3(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("degrees must be nonnegative");
  const Params p{a, b, 3};
  if (a < 2) return std::nullopt;
  if (a == 2 && (b == 1 || b == 2)) {
    // Two light triangles; heavy edges go across.
    WGraph g(6);
    for (int t = 0; t < 2; ++t)
      for (int i = 0; i < 3; ++i) g.add_light(3 * t + i, 3 * t + (i + 1) % 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (b == 1 ? i == j : i != j) g.add_heavy(i, 3 + j);
    return detail::finish(std::move(g), "g3", "two-triangles", p);
  }
  if (a == 2) {
    const int n = b + 3;
    Graph light(n);
    detail::embed(light, cages::complete(3), 0);
    if (b > 0) detail::embed(light, cages::cycle(b), 3);
    return detail::finish(WGraph(light, light.complement()), "g3", "triangle-plus-cycle", p);
  }
  if (a % 2 == 1 && b % 2 == 1) {
    const int n = a + b + 2;
    auto f = one_factorization(n);
    return detail::finish(WGraph(f.union_of(0, a - 1), f.union_of(a, n - 3)), "g3", "odd-odd", p);
  }
  const int n = a + b + 1;
  Graph light = (a % 2 == 0 && b % 2 == 0) ? two_factorization(n).union_of(0, a / 2 - 1)
                                            : one_factorization(n).union_of(0, a - 1);
  return detail::finish(WGraph(light, light.complement()), "g3",
                        (a % 2 == 0 && b % 2 == 0) ? "even-even" : "mixed-parity", p);
}

// ---------------------------------------------------------------- girth 4

/// An a-regular graph of girth 4 on n = a+b+2 vertices plus heavy cliques.
inline Construction leqab2(int a, int b) {
  if (!(3 <= a && a <= b && a % 2 == b % 2)) throw std::invalid_argument("needs 3 <= a <= b, a = b mod 2");
  const int n = a + b + 2, m = n / 2;
  auto f = one_factorization_bipartite(m);
  Graph heavy(n);
  detail::embed(heavy, cages::complete(m), 0);
  detail::embed(heavy, cages::complete(m), m);
  heavy |= f.union_of(a, m - 2);
  return detail::finish(WGraph(f.union_of(0, a - 1), heavy), "g4", "bipartite-plus-cliques", {a, b, 4});
}

/// Triangle-free a-regular graph of girth 4 on n >= 5a/2 vertices, a even.
/// Vertices are split into independent blocks of size a/2 (and k or
/// a/2 +- k); blocks are joined completely or by a regular bipartite graph
/// made of cyclic matchings.
inline Graph block_graph(int a, int n) {
  if (a < 4 || a % 2 != 0) throw std::invalid_argument("block construction needs even a >= 4");
  const int h = a / 2;
  if (2 * n < 5 * a) throw std::invalid_argument("block construction needs n >= 5a/2");
  const int r = (n - 5 * h) / h, k = (n - 5 * h) % h;
  Graph g(n);
  int next = 0;
  auto block = [&](int size) {
    std::vector<int> v;
    for (int i = 0; i < size; ++i) v.push_back(next++);
    return v;
  };
  if (r == 0) {
    auto a1 = block(h + k), a2 = block(h + k), r1 = block(h), r2 = block(h), mid = block(h - k);
    detail::cyclic_matchings(g, a1, a2, h);
    detail::join(g, a1, r1);
    detail::join(g, r1, mid);
    detail::join(g, mid, r2);
    detail::join(g, r2, a2);
  } else {
    auto kb = block(k), p2 = block(h), p3 = block(h), p4 = block(h), p5 = block(h), p6 = block(h);
    detail::join(g, p2, kb);
    detail::join(g, kb, p3);
    detail::join(g, p3, p6);
    detail::join(g, p6, p4);
    detail::cyclic_matchings(g, p2, p4, h - k);
    detail::cyclic_matchings(g, p4, p5, k);
    detail::cyclic_matchings(g, p5, p3, h - k);
    std::vector<int> prev = p5;
    for (int i = 0; i < r; ++i) {
      auto gray = block(h);
      detail::join(g, prev, gray);
      prev = gray;
    }
    detail::join(g, prev, p2);
  }
  return g;
}

inline std::optional<Construction> construct_g4(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("degrees must be nonnegative");
  const Params p{a, b, 4};
  if (a < 2) return std::nullopt;
  if (a == 2 && b == 0) return detail::finish(WGraph(cages::cycle(4), Graph(4)), "g4", "square", p);
  if (a == 2) {
    Graph light = cages::cycle(b + 3);
    return detail::finish(WGraph(light, light.complement()), "g4", "cycle-complement", p);
  }
  const bool a_odd = a % 2 == 1, b_odd = b % 2 == 1;
  if (a > b && !(a_odd && b_odd)) {
    Graph light = cages::complete_bipartite(a);
    Graph heavy(2 * a);
    Graph part = detail::regular_by_factors(a, b);
    detail::embed(heavy, part, 0);
    detail::embed(heavy, part, a);
    return detail::finish(WGraph(light, heavy), "g4", "Kaa", p);
  }
  if (a > b) {
    const int m = a + 1;
    Graph light = cages::complete_bipartite(m);
    for (int i = 0; i < m; ++i) light.remove_edge(i, m + i);
    Graph heavy(2 * m);
    Graph part = one_factorization(m).union_of(0, b - 1);
    detail::embed(heavy, part, 0);
    detail::embed(heavy, part, m);
    return detail::finish(WGraph(light, heavy), "g4", "Kaa-minus-matching", p);
  }
  if (a_odd != b_odd) {
    Graph light = one_factorization_bipartite((a + b + 1) / 2).union_of(0, a - 1);
    return detail::finish(WGraph(light, light.complement()), "g4", "bipartite-factors", p);
  }
  if (a_odd || 2 * b <= 3 * a - 4) return leqab2(a, b);
  Graph light = block_graph(a, a + b + 1);
  return detail::finish(WGraph(light, light.complement()), "g4", "blocks", p);
}

/// An a-regular graph of girth 4 on n vertices, or empty when none exists.
inline std::optional<Graph> a_regular_girth4(int a, int n) {
  if (a < 3) throw std::invalid_argument("a must be at least 3");
  if (n % 2 == 0 && n >= 2 * a) return one_factorization_bipartite(n / 2).union_of(0, a - 1);
  if (n % 2 == 1 && a % 2 == 0 && 2 * n >= 5 * a) return block_graph(a, n);
  return std::nullopt;
}

// ---------------------------------------------------------------- girth 5, 6

inline Construction construct_g56(int a, int b, int g) {
  const Params p{a, b, g};
  if (!g56_value(a, b, g)) throw std::invalid_argument(to_string(p) + " is outside the girth 5/6 families");
  if (g == 5 && a == 1 && b % 2 == 0) {
    Graph light = one_factorization(b + 2).factors[0];
    return detail::finish(WGraph(light, light.complement()), "g56", "matching-complement", p);
  }
  if (g == 5 && a == 1) {
    const int n = b + 3;
    auto f = one_factorization(n);
    return detail::finish(WGraph(f.factors[0], f.union_of(1, n - 3)), "g56", "matching-factors", p);
  }
  if (g == 5) {
    Graph light = cages::cycle(b + 5);
    return detail::finish(WGraph(light, light.square().complement()), "g56", "cycle-square-complement", p);
  }
  if (a == 1) {
    const int m = b + 1;
    Graph heavy(2 * m), light(2 * m);
    detail::embed(heavy, cages::complete(m), 0);
    detail::embed(heavy, cages::complete(m), m);
    for (int i = 0; i < m; ++i) light.add_edge(i, m + i);
    return detail::finish(WGraph(light, heavy), "g56", "two-cliques", p);
  }
  // u_i = i, v_i = m + i; light zigzag u_i v_i u_{i+1}.
  const int m = b + 3;
  Graph heavy(2 * m), light(2 * m);
  Graph part = cages::cycle(m).complement();
  detail::embed(heavy, part, 0);
  detail::embed(heavy, part, m);
  for (int i = 0; i < m; ++i) {
    light.add_edge(i, m + i);
    light.add_edge(m + i, (i + 1) % m);
  }
  return detail::finish(WGraph(light, heavy), "g56", "zigzag", p);
}

// ---------------------------------------------------------------- generic builders

struct BuildOptions {
  /// Upper limit on the order of any intermediate or final graph.
  int max_order = 4096;
  /// Node budget for searching an auxiliary regular graph not in the catalog.
  std::uint64_t search_budget = 2'000'000;
};

/// Smallest available D-regular graph with girth >= g: K1, K2, a cycle, a
/// catalog cage, or a search result.
inline std::optional<Graph> regular_graph_min_girth(int d, int g, const BuildOptions& opt = {}) {
  if (d == 0) return Graph(1);
  if (d == 1) return cages::complete(2);
  if (g <= 3) return cages::complete(d + 1);
  if (d == 2) return cages::cycle(g);
  std::optional<CageRecord> best;
  for (int h = g; h <= 12; ++h) {
    auto c = get_cage(d, h);
    if (c && (!best || c->order < best->order)) best = std::move(c);
  }
  if (best) return best->graph;
  SearchConfig cfg;
  cfg.node_budget = opt.search_budget;
  auto found = find_wcage({d, 0, g}, cfg);
  if (found.status == SearchStatus::exact) return found.witness->light();
  return std::nullopt;
}

/// A shortest (a,b,g)-wcycle per the existence characterization.
inline WGraph minimal_wcycle(const Params& p) {
  if (!wcycle_exists(p)) throw std::invalid_argument("no " + to_string(p) + "-wcycle exists");
  std::vector<EdgeWeight> ws;
  const auto L = EdgeWeight::light, H = EdgeWeight::heavy;
  if (p.a >= 2) ws.assign(static_cast<std::size_t>(p.g), L);
  else if (p.a == 1 && p.g % 2 == 1) {
    ws.push_back(L);
    ws.insert(ws.end(), static_cast<std::size_t>((p.g - 1) / 2), H);
  } else if (p.a == 1 && p.b >= 2) ws.assign(static_cast<std::size_t>(p.g / 2), H);
  else if (p.a == 1) {
    for (int i = 0; i < p.g / 3; ++i) {
      ws.push_back(L);
      ws.push_back(H);
    }
  } else ws.assign(static_cast<std::size_t>(p.g / 2), H);
  const int n = static_cast<int>(ws.size());
  WGraph c(n);
  for (int i = 0; i < n; ++i) c.add_edge(i, (i + 1) % n, ws[static_cast<std::size_t>(i)]);
  return c;
}

namespace detail {

/// Copies `g` into every fiber of a product with |g| vertices per fiber.
inline Graph replicate(const Graph& g, int fibers) {
  Graph out(g.order() * fibers);
  for (int f = 0; f < fibers; ++f) embed(out, g, f * g.order());
  return out;
}

inline Graph aux_graph(int d, int g, const BuildOptions& opt) {
  auto y = regular_graph_min_girth(d, g, opt);
  if (!y)
    throw UnsupportedParameters("unsupported parameters: no " + std::to_string(d) + "-regular graph of girth >= " +
                                std::to_string(g) + " available");
  return *y;
}

inline void check_size(long long n, const BuildOptions& opt) {
  if (n > opt.max_order)
    throw UnsupportedParameters("unsupported parameters: construction would need " + std::to_string(n) +
                                " vertices (limit " + std::to_string(opt.max_order) + ")");
}

}  // namespace detail

/// Two extensions of a minimal wcycle: first the light side with Y0 of girth
/// >= g, then the heavy side with Y1 of girth >= ceil(g/2).
inline Construction build_thm_construction(const Params& p, const BuildOptions& opt = {}) {
  WGraph g0 = minimal_wcycle(p);
  const long long d0 = defect(g0.light(), p.a);
  detail::check_size(d0 + 1, opt);
  Graph y0 = detail::aux_graph(static_cast<int>(d0), p.g, opt);
  detail::check_size(static_cast<long long>(g0.order()) * y0.order(), opt);
  auto z1 = extend(g0.light(), p.a, y0);
  WGraph g1(z1.z, detail::replicate(g0.heavy(), y0.order()));

  const long long d1 = defect(g1.heavy(), p.b);
  detail::check_size(d1 + 1, opt);
  Graph y1 = detail::aux_graph(static_cast<int>(d1), (p.g + 1) / 2, opt);
  detail::check_size(static_cast<long long>(g1.order()) * y1.order(), opt);
  auto z2 = extend(g1.heavy(), p.b, y1);
  WGraph g2(detail::replicate(g1.light(), y1.order()), z2.z);
  return detail::finish(std::move(g2), "thm34", "wcycle-extension", p);
}

/// The four cage-based upper-bound builders; cases that do not apply or lack
/// an auxiliary graph are skipped and explained in `notes`.
struct UpperBounds {
  std::vector<Construction> builds;
  std::vector<std::string> notes;
};

inline UpperBounds upper_bound_builders(const Params& p, const BuildOptions& opt = {}) {
  UpperBounds out;
  auto attempt = [&](const char* tag, auto&& fn) {
    try {
      out.builds.push_back(fn());
      out.builds.back().case_tag = tag;
    } catch (const UnsupportedParameters& e) {
      out.notes.push_back(std::string(tag) + ": " + e.what());
    }
  };
  auto need_cage = [](int r, int g) {
    auto c = get_cage(r, g);
    if (!c) throw UnsupportedParameters("no (" + std::to_string(r) + "," + std::to_string(g) + ")-cage in catalog");
    return c->graph;
  };
  // 1: light cage, heavy edges from one extension.
  if (p.a >= 2 && p.g >= 3)
    attempt("case1", [&] {
      Graph cage = need_cage(p.a, p.g);
      Graph empty(cage.order());
      const long long d = defect(empty, p.b);
      detail::check_size(d + 1, opt);
      Graph y = detail::aux_graph(static_cast<int>(d), (p.g + 1) / 2, opt);
      detail::check_size(static_cast<long long>(cage.order()) * y.order(), opt);
      auto z = extend(empty, p.b, y);
      return detail::finish(WGraph(detail::replicate(cage, y.order()), z.z), "bounds", "case1", p);
    });
  // 2: heavy cage of girth g/2, light edges from one extension.
  if (p.b >= 2 && p.g >= 6 && p.g % 2 == 0)
    attempt("case2", [&] {
      Graph cage = need_cage(p.b, p.g / 2);
      Graph empty(cage.order());
      const long long d = defect(empty, p.a);
      detail::check_size(d + 1, opt);
      Graph y = detail::aux_graph(static_cast<int>(d), p.g, opt);
      detail::check_size(static_cast<long long>(cage.order()) * y.order(), opt);
      auto z = extend(empty, p.a, y);
      return detail::finish(WGraph(z.z, detail::replicate(cage, y.order())), "bounds", "case2", p);
    });
  // 3: two light cages joined by a heavy matching.
  if (p.a >= 2 && p.b == 1 && p.g <= 6)
    attempt("case3", [&] {
      Graph cage = need_cage(p.a, p.g);
      const int n = cage.order();
      Graph heavy(2 * n);
      for (int i = 0; i < n; ++i) heavy.add_edge(i, n + i);
      return detail::finish(WGraph(detail::replicate(cage, 2), heavy), "bounds", "case3", p);
    });
  // 4: two heavy cliques joined by a light matching.
  if (p.a == 1 && p.b >= 1 && p.g == 6)
    attempt("case4", [&] {
      const int m = static_cast<int>(*tilde_n(p.b, 3));
      Graph light(2 * m);
      for (int i = 0; i < m; ++i) light.add_edge(i, m + i);
      return detail::finish(WGraph(light, detail::replicate(cages::complete(m), 2)), "bounds", "case4", p);
    });
  return out;
}

}  // namespace wcage
