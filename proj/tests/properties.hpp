#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// binary. Every suite draws its inputs from a seeded generator and checks the
// library against the reference code in oracles.hpp or a direct restatement
// of the property.

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "wcage/wcage.hpp"

namespace props {

using namespace wcage;

struct Report {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
  bool ok() const { return failures == 0; }
};

inline std::string describe(const WGraph& g) {
  std::string s = to_wgf(g);
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}

inline double unit(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0, 1)(rng); }
inline int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Library girth against cycle enumeration on n <= 8, and the forest criterion.
inline Report girth_oracle(int cases, std::uint64_t seed) {
  Report r{"girth oracle equivalence"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    int n = pick(rng, 0, 8);
    double density = unit(rng) * 0.7;
    auto g = oracle::random_wgraph(rng, n, density * unit(rng), density * unit(rng));
    auto lib = wgirth(g);
    auto ref = oracle::wgirth(g);
    if (!(lib == ref)) r.fail("wgirth " + lib.str() + " vs oracle " + ref.str() + " on " + describe(g));
    int edges = static_cast<int>(g.support().edges().size());
    bool forest = edges <= n - oracle::components(g);
    if (forest != lib.is_infinite()) r.fail("forest criterion disagrees on " + describe(g));
  }
  return r;
}

/// wgirth and the canonical certificate survive random relabeling.
inline Report relabel_invariance(int cases, std::uint64_t seed) {
  Report r{"relabel invariance"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    int n = pick(rng, 1, 12);
    auto g = oracle::random_wgraph(rng, n, 0.1 + 0.3 * unit(rng), 0.1 + 0.3 * unit(rng));
    auto h = g.relabeled(oracle::random_permutation(rng, n));
    if (!(wgirth(g) == wgirth(h))) r.fail("wgirth changed under relabeling of " + describe(g));
    if (canonical_certificate(g) != canonical_certificate(h)) r.fail("certificate changed for " + describe(g));
    if (canonical_relabeling(g) != canonical_relabeling(h)) r.fail("canonical form changed for " + describe(g));
  }
  return r;
}

inline Report distance_oracle(int cases, std::uint64_t seed) {
  Report r{"wdistance against Floyd-Warshall"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    int n = pick(rng, 1, 10);
    auto g = oracle::random_wgraph(rng, n, 0.25 * unit(rng), 0.25 * unit(rng));
    auto d = oracle::distances(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        long long want = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        auto got = wdistance(g, u, v);
        bool same = want < 0 ? got.is_infinite() : got == want;
        if (!same) r.fail("distance " + std::to_string(u) + "-" + std::to_string(v) + " on " + describe(g));
      }
  }
  return r;
}

/// Pairwise disjoint, k-regular factors whose union is exactly the host.
inline bool factorization_ok(const Factorization& f, bool bipartite) {
  std::set<std::pair<int, int>> seen;
  for (const auto& g : f.factors) {
    if (g.order() != f.order) return false;
    for (Vertex v = 0; v < f.order; ++v)
      if (g.degree(v) != f.k) return false;
    for (auto [u, v] : g.edges())
      if (!seen.insert({u, v}).second) return false;
  }
  const int m = f.order / 2;
  std::size_t expected = bipartite ? static_cast<std::size_t>(m) * m
                                   : static_cast<std::size_t>(f.order) * (f.order - 1) / 2;
  if (seen.size() != expected) return false;
  for (auto [u, v] : seen) {
    if (u == v) return false;
    if (bipartite && (u < m) == (v < m)) return false;
  }
  return true;
}

inline Report factorization_completeness(int cases, std::uint64_t seed) {
  Report r{"factorization completeness and disjointness"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    switch (i % 3) {
      case 0: {
        int n = 2 * pick(rng, 2, 25) + 1;
        if (!factorization_ok(two_factorization(n), false)) r.fail("2-factorization of K_" + std::to_string(n));
        break;
      }
      case 1: {
        int n = 2 * pick(rng, 2, 25);
        if (!factorization_ok(one_factorization(n), false)) r.fail("1-factorization of K_" + std::to_string(n));
        break;
      }
      default: {
        int m = pick(rng, 3, 40);
        if (!factorization_ok(one_factorization_bipartite(m), true))
          r.fail("1-factorization of K_{m,m}, m=" + std::to_string(m));
      }
    }
  }
  return r;
}

/// A k-regular graph on n vertices (k < n, nk even): a circulant, then shuffled.
inline Graph random_regular(std::mt19937_64& rng, int n, int k) {
  Graph c(n);
  for (int s = 1; s <= k / 2; ++s)
    for (int x = 0; x < n; ++x) c.add_edge(x, (x + s) % n);
  if (k % 2 == 1)
    for (int x = 0; x < n / 2; ++x) c.add_edge(x, x + n / 2);
  return c.relabeled(oracle::random_permutation(rng, n));
}

/// Checks the semidirect-product postconditions directly from Z's edges.
inline std::string extension_problem(const SemidirectWitness& w, const Graph& x, const Graph& y, int d) {
  const int nx = x.order(), ny = y.order();
  if (w.z.order() != nx * ny) return "|Z| != |X||Y|";
  for (Vertex v = 0; v < w.z.order(); ++v)
    if (w.z.degree(v) != d) return "Z is not d-regular";
  std::set<std::pair<int, int>> between;
  for (auto [u, v] : w.z.edges()) {
    int fu = u / nx, fv = v / nx;
    if (fu == fv) {
      if (!x.has_edge(u % nx, v % nx)) return "fiber edge outside X";
    } else {
      if (!y.has_edge(fu, fv)) return "external edge outside Y";
      if (!between.insert({std::min(fu, fv), std::max(fu, fv)}).second) return "two edges between fibers";
    }
  }
  for (int f = 0; f < ny; ++f)
    for (auto [u, v] : x.edges())
      if (!w.z.has_edge(f * nx + u, f * nx + v)) return "fiber does not induce X";
  if (between.size() != y.edges().size()) return "some Y-edge unused";
  if (!semidirect_violations(w, d).empty()) return "library checker disagrees";
  return "";
}

inline Report extension_postconditions(int cases, std::uint64_t seed) {
  Report r{"extension postconditions"};
  std::mt19937_64 rng(seed);
  while (r.cases < cases) {
    int nx = pick(rng, 1, 8);
    int d = pick(rng, 1, 5);
    Graph x(nx);
    // Random edges under the degree cap; the defect then decides Y.
    for (int tries = 0; tries < 3 * nx * nx; ++tries) {
      int u = pick(rng, 0, nx - 1), v = pick(rng, 0, nx - 1);
      if (u == v || x.has_edge(u, v) || x.degree(u) >= d || x.degree(v) >= d) continue;
      if (unit(rng) < 0.8) x.add_edge(u, v);
    }
    long long k = defect(x, d);
    if (k > 12) continue;
    int ny = static_cast<int>(k) + 1 + pick(rng, 0, 5);
    if (k % 2 == 1 && ny % 2 == 1) ++ny;
    Graph y = random_regular(rng, ny, static_cast<int>(k));
    ++r.cases;
    auto w = extend(x, d, y);
    auto why = extension_problem(w, x, y, d);
    if (!why.empty()) r.fail(why + " (|X|=" + std::to_string(nx) + ", d=" + std::to_string(d) + ")");
  }
  return r;
}

/// WGF text and results JSON both round-trip exactly.
inline Report serialization_roundtrip(int cases, std::uint64_t seed) {
  Report r{"serialization round-trips"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    int n = pick(rng, 0, 30);
    auto g = oracle::random_wgraph(rng, n, 0.3 * unit(rng), 0.3 * unit(rng));
    std::string text = to_wgf(g);
    if (parse_wgf(text) != g) r.fail("WGF round-trip of " + describe(g));
    if (to_wgf(parse_wgf(text)) != text) r.fail("WGF text not stable for " + describe(g));

    ResultRecord rec;
    rec.params = {pick(rng, 0, 9), pick(rng, 0, 9), pick(rng, 3, 14)};
    rec.provenance = static_cast<Provenance>(pick(rng, 0, 2));
    rec.timestamp = "2026-01-0" + std::to_string(pick(rng, 1, 9)) + "T00:00:00Z";
    int kind = pick(rng, 0, 2);
    if (kind == 0) {
      rec.status = ResultStatus::nonexistent;
    } else if (kind == 1) {
      rec.status = ResultStatus::bracketed;
      rec.lower = pick(rng, 1, 50);
      rec.upper = unit(rng) < 0.5 ? Extended::infinite() : Extended(rec.lower + pick(rng, 0, 20));
    } else {
      rec.status = ResultStatus::exact;
      rec.lower = n;
      rec.upper = Extended(n);
      if (unit(rng) < 0.5) rec.witness = text;
    }
    if (record_from_json(to_json(rec)) != rec) r.fail("record JSON round-trip for " + to_string(rec.params));
  }
  return r;
}

/// Random (a,b)-regular wgraphs: whenever one is a witness, n*a and n*b are even.
inline Report witness_parity(int cases, std::uint64_t seed) {
  Report r{"witness parity"};
  std::mt19937_64 rng(seed);
  int witnesses = 0;
  while (r.cases < cases) {
    int n = pick(rng, 3, 14);
    int a = pick(rng, 0, 3), b = pick(rng, 0, 3);
    if (a + b >= n || (n * a) % 2 || (n * b) % 2) {
      // Odd degree sums cannot be realized; a random graph must then fail verification.
      auto g = oracle::random_wgraph(rng, n, 0.3, 0.3);
      Params p{a, b, static_cast<int>(std::min<long long>(wgirth(g).is_finite() ? wgirth(g).value() : 3, 1000))};
      ++r.cases;
      if (verify_witness(g, p) && ((n * a) % 2 || (n * b) % 2)) r.fail("parity violated by " + describe(g));
      continue;
    }
    Graph light = random_regular(rng, n, a), heavy = random_regular(rng, n, b);
    if (!light.disjoint_from(heavy)) continue;
    WGraph g(light, heavy);
    auto gw = wgirth(g);
    if (gw.is_infinite()) continue;
    ++r.cases;
    Params p{a, b, static_cast<int>(gw.value())};
    if (!verify_witness(g, p)) r.fail("regular construction failed to verify: " + describe(g));
    else if ((n * a) % 2 || (n * b) % 2) r.fail("parity violated by " + describe(g));
    else ++witnesses;
  }
  if (witnesses == 0) r.fail("no witnesses were generated");
  return r;
}

inline std::vector<Report> run_all(int cases, std::uint64_t seed) {
  return {girth_oracle(cases, seed),
          relabel_invariance(cases, seed + 1),
          distance_oracle(cases, seed + 2),
          factorization_completeness(cases, seed + 3),
          extension_postconditions(cases, seed + 4),
          serialization_roundtrip(cases, seed + 5),
          witness_parity(cases, seed + 6)};
}

}  // namespace props
