#pragma once

// Independent reference implementations used to check the library.

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "wcage/graph.hpp"

namespace oracle {

using wcage::EdgeWeight;
using wcage::Extended;
using wcage::Vertex;
using wcage::WGraph;

inline int weight_of(const WGraph& g, Vertex u, Vertex v) {
  if (u == v) return 0;
  auto w = g.weight(u, v);
  return w == EdgeWeight::light ? 1 : w == EdgeWeight::heavy ? 2 : 0;
}

/// Minimum weight over all simple cycles, by DFS from each smallest vertex.
inline Extended wgirth(const WGraph& g) {
  const int n = g.order();
  long long best = std::numeric_limits<long long>::max();
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::function<void(Vertex, Vertex, int, long long)> dfs = [&](Vertex start, Vertex v, int len, long long w) {
    for (Vertex x = start; x < n; ++x) {
      int e = weight_of(g, v, x);
      if (e == 0) continue;
      if (x == start && len >= 3) best = std::min(best, w + e);
      if (x > start && !on[static_cast<std::size_t>(x)]) {
        on[static_cast<std::size_t>(x)] = 1;
        dfs(start, x, len + 1, w + e);
        on[static_cast<std::size_t>(x)] = 0;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[static_cast<std::size_t>(s)] = 1;
    dfs(s, s, 1, 0);
    on[static_cast<std::size_t>(s)] = 0;
  }
  return best == std::numeric_limits<long long>::max() ? Extended::infinite() : Extended(best);
}

/// All-pairs weighted distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<long long>> distances(const WGraph& g) {
  const int n = g.order();
  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<std::vector<long long>> d(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), inf));
  for (Vertex u = 0; u < n; ++u) {
    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] = 0;
    for (Vertex v = 0; v < n; ++v)
      if (int w = weight_of(g, u, v)) d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = w;
  }
  for (std::size_t k = 0; k < d.size(); ++k)
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

inline int components(const WGraph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  int c = n;
  for (auto [u, v] : g.support().edges()) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --c;
    }
  }
  return c;
}

/// Each pair independently none / light / heavy.
inline WGraph random_wgraph(std::mt19937_64& rng, int n, double p_light, double p_heavy) {
  WGraph g(n);
  std::uniform_real_distribution<double> u(0, 1);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      double r = u(rng);
      if (r < p_light) g.add_light(x, y);
      else if (r < p_light + p_heavy) g.add_heavy(x, y);
    }
  return g;
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
