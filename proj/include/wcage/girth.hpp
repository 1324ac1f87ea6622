#pragma once

// Weighted girth, weighted distance and witness verification.
//
// Every heavy edge is subdivided by an auxiliary vertex, which turns the
// wgraph into a unit-weight graph whose cycle lengths equal the weights of
// the original wcycles. Girth is then the usual BFS-from-every-vertex
// computation, restricted to original sources (every cycle passes through
// one).

#include <queue>
#include <string>
#include <vector>

#include "wcage/graph.hpp"

namespace wcage {

namespace detail {

inline std::vector<std::vector<int>> subdivided_adjacency(const WGraph& g) {
  const int n = g.order();
  auto heavy = g.heavy().edges();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + heavy.size());
  for (auto [u, v] : g.light().edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  int aux = n;
  for (auto [u, v] : heavy) {
    adj[static_cast<std::size_t>(u)].push_back(aux);
    adj[static_cast<std::size_t>(v)].push_back(aux);
    adj[static_cast<std::size_t>(aux)] = {u, v};
    ++aux;
  }
  return adj;
}

}  // namespace detail

/// Minimum weight of a wcycle; infinite for forests.
inline GirthValue wgirth(const WGraph& g) {
  const int n = g.order();
  auto adj = detail::subdivided_adjacency(g);
  const auto total = adj.size();
  long long best = -1;
  std::vector<int> dist(total), parent(total);
  std::vector<int> queue;
  queue.reserve(total);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      int dx = dist[static_cast<std::size_t>(x)];
      if (best >= 0 && 2 * dx + 1 >= best) break;
      for (int y : adj[static_cast<std::size_t>(x)]) {
        auto& dy = dist[static_cast<std::size_t>(y)];
        if (dy < 0) {
          dy = dx + 1;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        } else if (parent[static_cast<std::size_t>(x)] != y) {
          long long c = dx + dy + 1;
          if (best < 0 || c < best) best = c;
        }
      }
    }
  }
  return best < 0 ? GirthValue::infinite() : GirthValue(best);
}

/// Ordinary girth of a simple graph (all edges weight 1).
inline GirthValue girth(const Graph& g) { return wgirth(WGraph(g, Graph(g.order()))); }

/// Weighted distances from `source` to every original vertex.
inline std::vector<Extended> wdistances(const WGraph& g, Vertex source) {
  const int n = g.order();
  if (source < 0 || source >= n)
    throw std::out_of_range("vertex " + std::to_string(source) + " out of range");
  auto adj = detail::subdivided_adjacency(g);
  std::vector<int> dist(adj.size(), -1);
  std::vector<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : adj[static_cast<std::size_t>(x)])
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
  }
  std::vector<Extended> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int d = dist[static_cast<std::size_t>(v)];
    out.push_back(d < 0 ? Extended::infinite() : Extended(d));
  }
  return out;
}

/// Minimum weight of a wpath between u and v.
inline Extended wdistance(const WGraph& g, Vertex u, Vertex v) {
  if (v < 0 || v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return wdistances(g, u)[static_cast<std::size_t>(v)];
}

/// Every vertex has exactly `a` light and `b` heavy neighbours.
inline bool is_biregular(const WGraph& g, int a, int b) {
  return g.light().is_regular(a) && g.heavy().is_regular(b);
}

/// (a,b)-regular with weighted girth exactly g.
inline bool verify_witness(const WGraph& g, const Params& p) {
  return is_biregular(g, p.a, p.b) && wgirth(g) == p.g;
}

/// Human-readable reasons a wgraph fails to be a witness (empty when it is one).
inline std::vector<std::string> witness_violations(const WGraph& g, const Params& p) {
  std::vector<std::string> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    int dl = g.light().degree(v), dh = g.heavy().degree(v);
    if (dl != p.a)
      out.push_back("vertex " + std::to_string(v) + " has light degree " + std::to_string(dl) +
                    ", expected " + std::to_string(p.a));
    if (dh != p.b)
      out.push_back("vertex " + std::to_string(v) + " has heavy degree " + std::to_string(dh) +
                    ", expected " + std::to_string(p.b));
  }
  auto gw = wgirth(g);
  if (!(gw == p.g)) out.push_back("girth=" + gw.str() + ", expected " + std::to_string(p.g));
  return out;
}

}  // namespace wcage
