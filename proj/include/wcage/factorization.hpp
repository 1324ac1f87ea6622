#pragma once

// Explicit factorizations of K_n and K_{m,m}.

#include <stdexcept>
#include <string>
#include <vector>

#include "wcage/graph.hpp"

namespace wcage {

enum class Host { complete, complete_bipartite };

struct Factorization {
  Host host = Host::complete;
  /// Vertex count of the host: n for K_n, 2m for K_{m,m}.
  int order = 0;
  /// Regularity of every factor.
  int k = 0;
  std::vector<Graph> factors;

  Graph host_graph() const {
    Graph h(order);
    if (host == Host::complete) {
      for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) h.add_edge(u, v);
    } else {
      const int m = order / 2;
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) h.add_edge(x, m + y);
    }
    return h;
  }

  /// Union of factors[first..last], inclusive; empty when last < first.
  Graph union_of(int first, int last) const {
    Graph u(order);
    for (int i = first; i <= last; ++i) u |= factors.at(static_cast<std::size_t>(i));
    return u;
  }
};

inline int mod(long long x, int n) { return static_cast<int>(((x % n) + n) % n); }

/// K_n for odd n >= 5 as the circulant 2-factors F_i = {x, x+i}, i = 1..(n-1)/2;
/// factors[i-1] holds F_i.
inline Factorization two_factorization(int n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("2-factorization needs odd n >= 5");
  Factorization f{Host::complete, n, 2, {}};
  for (int i = 1; i <= (n - 1) / 2; ++i) {
    Graph g(n);
    for (int x = 0; x < n; ++x) g.add_edge(x, mod(x + i, n));
    f.factors.push_back(std::move(g));
  }
  return f;
}

/// K_n for even n >= 4. The vertices 0..n-2 form Z_{n-1}; `star` (default
/// n-1) is the extra vertex. F~_i = {star, i} plus {i+k, i-k}.
inline Factorization one_factorization(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("1-factorization needs even n >= 4");
  const int q = n - 1, star = n - 1;
  Factorization f{Host::complete, n, 1, {}};
  for (int i = 0; i < q; ++i) {
    Graph g(n);
    g.add_edge(star, i);
    for (int k = 1; k <= (q - 1) / 2; ++k) g.add_edge(mod(i + k, q), mod(i - k, q));
    f.factors.push_back(std::move(g));
  }
  return f;
}

/// K_{m,m} with x_j = j and y_j = m + j: F^_i = {x_j y_{j+i}}.
inline Factorization one_factorization_bipartite(int m) {
  if (m < 3) throw std::invalid_argument("bipartite 1-factorization needs m >= 3");
  Factorization f{Host::complete_bipartite, 2 * m, 1, {}};
  for (int i = 0; i < m; ++i) {
    Graph g(2 * m);
    for (int j = 0; j < m; ++j) g.add_edge(j, m + mod(j + i, m));
    f.factors.push_back(std::move(g));
  }
  return f;
}

/// Disjointness, union equal to the host, and k-regularity of every factor.
inline bool is_valid_factorization(const Factorization& f) {
  Graph seen(f.order);
  for (const auto& g : f.factors) {
    if (g.order() != f.order || !g.is_regular(f.k) || !seen.disjoint_from(g)) return false;
    seen |= g;
  }
  return seen == f.host_graph();
}

}  // namespace wcage
