#pragma once

// Known (r,g)-cages. Every graph is generated from a standard construction;
// data/cage_r<r>_g<g>.wgf holds the generated edge lists and
// data/cage_certificates.txt their canonical digests, which the tests compare.
// Minimality of these graphs is taken from the literature, not re-verified.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "wcage/girth.hpp"
#include "wcage/graph.hpp"
#include "wcage/moore.hpp"
#include "wcage/wgf.hpp"

#ifndef WCAGE_DATA_DIR
#define WCAGE_DATA_DIR "data"
#endif

namespace wcage {

struct CageRecord {
  int r = 0;
  int g = 0;
  long long order = 0;
  Graph graph;
  std::string name;
  std::optional<std::vector<Vertex>> hamiltonian_cycle;
  /// Regular spanning subgraphs known from the construction.
  std::vector<Graph> known_factors;
  std::string notes;
};

namespace cages {

inline Graph complete(int n) {
  Graph k(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) k.add_edge(u, v);
  return k;
}

inline Graph cycle(int n) {
  Graph c(n);
  for (int i = 0; i < n; ++i) c.add_edge(i, (i + 1) % n);
  return c;
}

/// K_{m,m} with parts {0..m-1} and {m..2m-1}.
inline Graph complete_bipartite(int m) {
  Graph k(2 * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) k.add_edge(x, m + y);
  return k;
}

/// Cubic graph given by LCF notation: the Hamiltonian cycle 0..n-1 plus
/// chords i -> i + shifts[i mod |shifts|].
inline Graph lcf(int n, const std::vector<int>& shifts) {
  Graph g = cycle(n);
  for (int i = 0; i < n; ++i) {
    int j = ((i + shifts[static_cast<std::size_t>(i) % shifts.size()]) % n + n) % n;
    if (!g.has_edge(i, j)) g.add_edge(i, j);
  }
  return g;
}

/// Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order, adjacent when disjoint.
inline Graph petersen() {
  std::vector<std::pair<int, int>> sets;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) sets.emplace_back(i, j);
  Graph g(10);
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      auto [a, b] = sets[static_cast<std::size_t>(u)];
      auto [c, d] = sets[static_cast<std::size_t>(v)];
      if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
    }
  return g;
}

/// Incidence graph of a point-line structure: points first, then lines.
inline Graph incidence(int points, const std::vector<std::vector<int>>& lines) {
  Graph g(points + static_cast<int>(lines.size()));
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (int p : lines[l]) g.add_edge(p, points + static_cast<int>(l));
  return g;
}

/// Fano plane incidence; lines {i, i+1, i+3} mod 7.
inline Graph heawood() {
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < 7; ++i) lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
  return incidence(7, lines);
}

inline Graph mcgee() { return lcf(24, {12, 7, -7}); }

/// Duads versus synthemes of {0..5}.
inline Graph tutte_coxeter() {
  std::vector<std::pair<int, int>> duads;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) duads.emplace_back(i, j);
  auto duad_index = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<int>(std::find(duads.begin(), duads.end(), std::make_pair(i, j)) - duads.begin());
  };
  std::vector<std::vector<int>> synthemes;
  for (int b = 1; b < 6; ++b) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x)
      if (x != b) rest.push_back(x);
    for (int c = 1; c < 4; ++c) {
      std::vector<int> last;
      for (int k = 1; k < 4; ++k)
        if (k != c) last.push_back(rest[static_cast<std::size_t>(k)]);
      synthemes.push_back({duad_index(0, b), duad_index(rest[0], rest[static_cast<std::size_t>(c)]),
                           duad_index(last[0], last[1])});
    }
  }
  return incidence(15, synthemes);
}

/// The (4,5)-cage as a Hamiltonian 19-cycle plus chords.
inline Graph robertson() {
  static constexpr std::array<std::pair<int, int>, 19> chords{{{0, 11},  {0, 15}, {1, 6},   {1, 9},
                                                               {2, 13},  {2, 17}, {3, 7},   {3, 11},
                                                               {4, 9},   {4, 15}, {5, 12},  {5, 18},
                                                               {6, 14},  {7, 16}, {8, 13},  {8, 18},
                                                               {10, 14}, {10, 17}, {12, 16}}};
  Graph g = cycle(19);
  for (auto [u, v] : chords) g.add_edge(u, v);
  return g;
}

/// Pentagons P_h and pentagrams Q_i, with P_{h,j} ~ Q_{i, h*i+j}.
inline Graph hoffman_singleton() {
  auto P = [](int h, int j) { return 5 * h + ((j % 5) + 5) % 5; };
  auto Q = [](int i, int j) { return 25 + 5 * i + ((j % 5) + 5) % 5; };
  Graph g(50);
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) {
      g.add_edge(P(h, j), P(h, j + 1));
      g.add_edge(Q(h, j), Q(h, j + 2));
      for (int i = 0; i < 5; ++i) g.add_edge(P(h, j), Q(i, h * i + j));
    }
  return g;
}

/// The 2-factor formed by the pentagons and pentagrams; the remaining
/// edges form a bipartite graph.
inline Graph hoffman_singleton_cycles() {
  Graph g = hoffman_singleton();
  Graph f(50);
  for (auto [u, v] : g.edges())
    if ((u < 25) == (v < 25)) f.add_edge(u, v);
  return f;
}

/// Incidence graph of the split Cayley hexagon of order 2. Points are the
/// nonzero trace-zero split octonions over GF(2) of norm zero, written as
/// Zorn matrices (a, v, w, a); lines are the triples {x, y, x+y} with xy = 0.
inline Graph benson() {
  using V3 = std::array<int, 3>;
  struct Oct {
    int a;
    V3 v, w;
    int b;
  };
  auto dot = [](const V3& x, const V3& y) { return (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) & 1; };
  auto cross = [](const V3& x, const V3& y) {
    return V3{(x[1] * y[2] + x[2] * y[1]) & 1, (x[2] * y[0] + x[0] * y[2]) & 1, (x[0] * y[1] + x[1] * y[0]) & 1};
  };
  auto mul = [&](const Oct& x, const Oct& y) {
    Oct z;
    z.a = (x.a * y.a + dot(x.v, y.w)) & 1;
    V3 c1 = cross(x.w, y.w), c2 = cross(x.v, y.v);
    for (int i = 0; i < 3; ++i) {
      auto k = static_cast<std::size_t>(i);
      z.v[k] = (x.a * y.v[k] + y.b * x.v[k] + c1[k]) & 1;
      z.w[k] = (y.a * x.w[k] + x.b * y.w[k] + c2[k]) & 1;
    }
    z.b = (dot(x.w, y.v) + x.b * y.b) & 1;
    return z;
  };
  auto code = [](const Oct& x) {
    return (x.a << 6) | (x.v[0] << 5) | (x.v[1] << 4) | (x.v[2] << 3) | (x.w[0] << 2) | (x.w[1] << 1) | x.w[2];
  };
  auto decode = [](int c) {
    Oct x{(c >> 6) & 1, {(c >> 5) & 1, (c >> 4) & 1, (c >> 3) & 1}, {(c >> 2) & 1, (c >> 1) & 1, c & 1}, 0};
    x.b = x.a;
    return x;
  };
  std::vector<int> points;
  std::vector<int> index(128, -1);
  for (int c = 1; c < 128; ++c) {
    Oct x = decode(c);
    if (((x.a * x.a + dot(x.v, x.w)) & 1) == 0) {
      index[static_cast<std::size_t>(c)] = static_cast<int>(points.size());
      points.push_back(c);
    }
  }
  std::vector<std::vector<int>> lines;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      int s = points[i] ^ points[j];
      if (s < points[j] || index[static_cast<std::size_t>(s)] < 0) continue;  // each line once
      if (code(mul(decode(points[i]), decode(points[j]))) != 0) continue;
      lines.push_back({static_cast<int>(i), static_cast<int>(j), index[static_cast<std::size_t>(s)]});
    }
  return incidence(static_cast<int>(points.size()), lines);
}

/// Incidence graph of PG(2,q) for q in {2,3,4,5,7}: the (q+1,6)-cage.
inline Graph projective_plane(int q) {
  // GF(4) as {0,1,x,x+1} with x^2 = x+1; primes use integer arithmetic.
  static constexpr int gf4_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  const bool prime = (q == 2 || q == 3 || q == 5 || q == 7);
  if (!prime && q != 4) throw std::invalid_argument("projective plane order must be 2, 3, 4, 5 or 7");
  auto add = [&](int x, int y) { return prime ? (x + y) % q : (x ^ y); };
  auto mul = [&](int x, int y) { return prime ? (x * y) % q : gf4_mul[x][y]; };
  // Normalized triples: first nonzero coordinate is 1.
  std::vector<std::array<int, 3>> pts;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) pts.push_back({1, x, y});
  for (int y = 0; y < q; ++y) pts.push_back({0, 1, y});
  pts.push_back({0, 0, 1});
  std::vector<std::vector<int>> lines;
  for (const auto& l : pts) {
    std::vector<int> on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pts[i];
      if (add(add(mul(l[0], p[0]), mul(l[1], p[1])), mul(l[2], p[2])) == 0) on.push_back(static_cast<int>(i));
    }
    lines.push_back(std::move(on));
  }
  return incidence(static_cast<int>(pts.size()), lines);
}

inline std::vector<Vertex> iota_cycle(int n) {
  std::vector<Vertex> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

}  // namespace cages

/// Named cages shipped as data files.
struct NamedCage {
  const char* name;
  int r;
  int g;
  long long order;
};

inline const std::vector<NamedCage>& named_cages() {
  static const std::vector<NamedCage> list{
      {"Petersen", 3, 5, 10},   {"Heawood", 3, 6, 14},         {"McGee", 3, 7, 24},
      {"Tutte-Coxeter", 3, 8, 30}, {"Robertson", 4, 5, 19},    {"Hoffman-Singleton", 7, 5, 50},
      {"Benson", 3, 12, 126},   {"PG(2,3) incidence", 4, 6, 26}, {"PG(2,4) incidence", 5, 6, 42},
      {"PG(2,5) incidence", 6, 6, 62}, {"PG(2,7) incidence", 8, 6, 114}};
  return list;
}

/// n(r,g) where the catalog knows it, without building the graph.
inline std::optional<long long> cage_order(int r, int g) {
  if (r < 2 || g < 3) return std::nullopt;
  if (g == 3) return r + 1;
  if (g == 4) return 2LL * r;
  if (r == 2) return g;
  for (const auto& c : named_cages())
    if (c.r == r && c.g == g) return c.order;
  return std::nullopt;
}

inline std::optional<CageRecord> get_cage(int r, int g) {
  auto order = cage_order(r, g);
  if (!order) return std::nullopt;
  CageRecord c;
  c.r = r;
  c.g = g;
  c.order = *order;
  c.notes = "minimality from the cage literature (not re-verified)";
  if (g == 3) {
    c.graph = cages::complete(r + 1);
    c.name = "K" + std::to_string(r + 1);
    c.hamiltonian_cycle = cages::iota_cycle(r + 1);
  } else if (g == 4) {
    c.graph = cages::complete_bipartite(r);
    c.name = "K" + std::to_string(r) + "," + std::to_string(r);
    std::vector<Vertex> h;
    for (int i = 0; i < r; ++i) {
      h.push_back(i);
      h.push_back(r + i);
    }
    c.hamiltonian_cycle = h;
  } else if (r == 2) {
    c.graph = cages::cycle(g);
    c.name = "C" + std::to_string(g);
    c.hamiltonian_cycle = cages::iota_cycle(g);
  } else if (r == 3 && g == 5) {
    c.graph = cages::petersen();
    c.name = "Petersen";
  } else if (r == 3 && g == 6) {
    c.graph = cages::heawood();
    c.name = "Heawood";
  } else if (r == 3 && g == 7) {
    c.graph = cages::mcgee();
    c.name = "McGee";
    c.hamiltonian_cycle = cages::iota_cycle(24);
  } else if (r == 3 && g == 8) {
    c.graph = cages::tutte_coxeter();
    c.name = "Tutte-Coxeter";
  } else if (r == 4 && g == 5) {
    c.graph = cages::robertson();
    c.name = "Robertson";
    c.hamiltonian_cycle = cages::iota_cycle(19);
  } else if (r == 7 && g == 5) {
    c.graph = cages::hoffman_singleton();
    c.name = "Hoffman-Singleton";
    c.known_factors.push_back(cages::hoffman_singleton_cycles());
  } else if (r == 3 && g == 12) {
    c.graph = cages::benson();
    c.name = "Benson";
  } else if (g == 6) {
    c.graph = cages::projective_plane(r - 1);
    c.name = "PG(2," + std::to_string(r - 1) + ") incidence";
  } else {
    return std::nullopt;
  }
  return c;
}

/// Order of the smallest r-regular graph of girth >= g.
inline std::optional<long long> tilde_n(int r, int g) {
  if (r < 0 || g < 2) throw std::invalid_argument("tilde_n needs r >= 0 and g >= 2");
  if (r <= 1 || g == 2) return r + 1;
  return cage_order(r, g);
}

/// Closed-form n(a,b,g) values using the catalog for ordinary cage orders.
inline SpecialValue special_exact_value(const Params& p) {
  return special_exact_value(p, [](int r, int g) { return cage_order(r, g); });
}

/// Problems found when checking a stored cage: regularity, girth, order, cycle.
inline std::vector<std::string> cage_violations(const CageRecord& c) {
  std::vector<std::string> out;
  if (c.graph.order() != c.order) out.push_back("order " + std::to_string(c.graph.order()));
  if (!c.graph.is_regular(c.r)) out.push_back("not " + std::to_string(c.r) + "-regular");
  auto gi = girth(c.graph);
  if (!(gi == c.g)) out.push_back("girth " + gi.str());
  if (c.hamiltonian_cycle) {
    const auto& h = *c.hamiltonian_cycle;
    std::vector<char> seen(static_cast<std::size_t>(c.graph.order()), 0);
    bool ok = static_cast<long long>(h.size()) == c.order;
    for (std::size_t i = 0; ok && i < h.size(); ++i) {
      Vertex v = h[i], w = h[(i + 1) % h.size()];
      if (v < 0 || v >= c.graph.order() || seen[static_cast<std::size_t>(v)] || !c.graph.has_edge(v, w)) ok = false;
      else seen[static_cast<std::size_t>(v)] = 1;
    }
    if (!ok) out.push_back("stored Hamiltonian cycle is invalid");
  }
  return out;
}

inline std::string data_dir() {
  if (const char* env = std::getenv("WCAGE_DATA_DIR")) return env;
  return WCAGE_DATA_DIR;
}

inline std::string cage_file_name(int r, int g) {
  return "cage_r" + std::to_string(r) + "_g" + std::to_string(g) + ".wgf";
}

/// Loads a stored cage (all-light WGF) and checks it.
inline CageRecord load_cage_file(const std::string& path, int r, int g) {
  WGraph w = read_wgf_file(path);
  if (w.heavy().edge_count() != 0) throw std::runtime_error(path + ": cage files must be all-light");
  CageRecord c;
  c.r = r;
  c.g = g;
  c.order = w.order();
  c.graph = w.light();
  c.name = path;
  auto bad = cage_violations(c);
  if (!bad.empty()) throw std::runtime_error(path + ": " + bad.front());
  return c;
}

}  // namespace wcage
