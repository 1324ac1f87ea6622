#pragma once

// Semidirect products Z = X ⋊ Y: |Y| disjoint copies of X plus one external
// edge per edge of Y. Vertex (x, y) of Z has index y*|X| + x.

#include <stdexcept>
#include <string>
#include <vector>

#include "wcage/graph.hpp"

namespace wcage {

struct SemidirectWitness {
  Graph z;
  Graph x;
  Graph y;
  /// fiber_map[v] is the vertex of Y whose copy of X contains v.
  std::vector<Vertex> fiber_map;
};

/// d*|X| minus the degree sum of X.
inline long long defect(const Graph& x, int d) {
  long long s = 0;
  for (Vertex v = 0; v < x.order(); ++v) s += x.degree(v);
  return static_cast<long long>(d) * x.order() - s;
}

/// Vertex (v, fiber) of a semidirect product with fibers of size `fiber_size`.
inline Vertex fiber_vertex(int fiber_size, Vertex v, Vertex fiber) { return fiber * fiber_size + v; }

/// Builds a d-regular Z = X ⋊ Y. Y-edges are processed in ascending order and
/// each joins the lowest-indexed deficient vertices of the two copies.
inline SemidirectWitness extend(const Graph& x, int d, const Graph& y) {
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  if (x.max_degree() > d)
    throw std::invalid_argument("X has a vertex of degree above d=" + std::to_string(d));
  const long long dd = defect(x, d);
  if (!y.is_regular(static_cast<int>(dd)))
    throw std::invalid_argument("Y must be " + std::to_string(dd) + "-regular (the defect of X)");
  const int nx = x.order(), ny = y.order();
  SemidirectWitness w{Graph(nx * ny), x, y, std::vector<Vertex>(static_cast<std::size_t>(nx * ny))};
  std::vector<int> deg(static_cast<std::size_t>(nx * ny), 0);
  for (Vertex f = 0; f < ny; ++f) {
    for (Vertex v = 0; v < nx; ++v) w.fiber_map[static_cast<std::size_t>(fiber_vertex(nx, v, f))] = f;
    for (auto [u, v] : x.edges()) {
      w.z.add_edge(fiber_vertex(nx, u, f), fiber_vertex(nx, v, f));
      ++deg[static_cast<std::size_t>(fiber_vertex(nx, u, f))];
      ++deg[static_cast<std::size_t>(fiber_vertex(nx, v, f))];
    }
  }
  auto deficient = [&](Vertex f) -> Vertex {
    for (Vertex v = 0; v < nx; ++v)
      if (deg[static_cast<std::size_t>(fiber_vertex(nx, v, f))] < d) return fiber_vertex(nx, v, f);
    return -1;
  };
  for (auto [f1, f2] : y.edges()) {
    Vertex z1 = deficient(f1), z2 = deficient(f2);
    // The degree count guarantees both exist; see the defect argument.
    if (z1 < 0 || z2 < 0) throw std::logic_error("extension ran out of deficient vertices");
    w.z.add_edge(z1, z2);
    ++deg[static_cast<std::size_t>(z1)];
    ++deg[static_cast<std::size_t>(z2)];
  }
  return w;
}

/// Checks the semidirect-product conditions and d-regularity of Z.
inline std::vector<std::string> semidirect_violations(const SemidirectWitness& w, int d) {
  std::vector<std::string> out;
  const int nx = w.x.order(), ny = w.y.order();
  if (w.z.order() != nx * ny) out.push_back("|Z| != |X|*|Y|");
  if (!w.z.is_regular(d)) out.push_back("Z is not " + std::to_string(d) + "-regular");
  Graph quotient(ny);
  for (auto [u, v] : w.z.edges()) {
    Vertex fu = w.fiber_map[static_cast<std::size_t>(u)], fv = w.fiber_map[static_cast<std::size_t>(v)];
    if (fu == fv) {
      if (!w.x.has_edge(u - fu * nx, v - fv * nx)) out.push_back("fiber edge not in X");
      continue;
    }
    if (!w.y.has_edge(fu, fv)) out.push_back("external edge does not map to a Y-edge");
    else if (quotient.has_edge(fu, fv)) out.push_back("two external edges over one Y-edge");
    else quotient.add_edge(fu, fv);
  }
  for (Vertex f = 0; f < ny; ++f)
    for (auto [u, v] : w.x.edges())
      if (!w.z.has_edge(fiber_vertex(nx, u, f), fiber_vertex(nx, v, f))) out.push_back("fiber misses an X-edge");
  if (quotient != w.y) out.push_back("some Y-edge has no preimage");
  return out;
}

}  // namespace wcage
