#pragma once

// Simple undirected graphs and weighted graphs (light/heavy edge pairs).
//
// Edge sets are bitsets over the n(n-1)/2 unordered pairs {u,v}, u<v, in
// row-major order, so membership is O(1) and copies are a memcpy.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wcage {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Index of the unordered pair {u,v} (u != v) among all pairs of [0,n).
constexpr std::size_t pair_index(int n, Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  auto uu = static_cast<std::size_t>(u);
  return uu * (2 * static_cast<std::size_t>(n) - uu - 1) / 2 +
         static_cast<std::size_t>(v - u - 1);
}

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    bits_.assign((pair_count() + 63) / 64, 0);
  }
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const noexcept { return n_; }
  std::size_t pair_count() const noexcept {
    return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0) / 2;
  }

  bool has_edge(Vertex u, Vertex v) const {
    check_pair(u, v);
    auto i = pair_index(n_, u, v);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }

  /// Adds {u,v}; throws on loops, out-of-range endpoints and duplicates.
  void add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    auto i = pair_index(n_, u, v);
    auto mask = std::uint64_t{1} << (i & 63);
    if (bits_[i >> 6] & mask)
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    bits_[i >> 6] |= mask;
  }

  void remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    auto i = pair_index(n_, u, v);
    bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t edge_count() const noexcept {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Edges as (u,v) with u<v, ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (test(pair_index(n_, u, v))) out.emplace_back(u, v);
    return out;
  }

  int degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (Vertex w = 0; w < n_; ++w)
      if (w != v && test(pair_index(n_, v, w))) ++d;
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool is_regular(int k) const {
    for (Vertex v = 0; v < n_; ++v)
      if (degree(v) != k) return false;
    return true;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n_; ++w)
      if (w != v && test(pair_index(n_, v, w))) out.push_back(w);
    return out;
  }

  std::vector<std::vector<Vertex>> adjacency_lists() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_));
    for (auto [u, v] : edges()) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
  }

  bool disjoint_from(const Graph& o) const {
    same_order(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & o.bits_[i]) return false;
    return true;
  }

  bool contains(const Graph& o) const {
    same_order(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if ((o.bits_[i] & ~bits_[i]) != 0) return false;
    return true;
  }

  Graph& operator|=(const Graph& o) {
    same_order(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }

  /// Removes the edges of `o` (graph difference X - Y keeps the vertices).
  Graph& operator-=(const Graph& o) {
    same_order(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
  }

  friend Graph operator|(Graph a, const Graph& b) { return a |= b; }
  friend Graph operator-(Graph a, const Graph& b) { return a -= b; }
  friend bool operator==(const Graph&, const Graph&) = default;

  Graph complement() const {
    Graph c(n_);
    for (std::size_t i = 0; i < pair_count(); ++i)
      if (!test(i)) c.bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    return c;
  }

  /// The graph on the same vertices joining vertices at distance 1 or 2.
  Graph square() const {
    Graph sq(n_);
    auto adj = adjacency_lists();
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : adj[static_cast<std::size_t>(v)]) {
        if (v < w && !sq.has_edge(v, w)) sq.add_edge(v, w);
        for (Vertex x : adj[static_cast<std::size_t>(w)])
          if (v < x && !sq.has_edge(v, x)) sq.add_edge(v, x);
      }
    }
    return sq;
  }

  /// Relabels vertex v as perm[v].
  Graph relabeled(const std::vector<Vertex>& perm) const {
    Graph out(n_);
    for (auto [u, v] : edges())
      out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
  }

  const std::vector<std::uint64_t>& raw_bits() const noexcept { return bits_; }

 private:
  bool test(std::size_t i) const noexcept { return (bits_[i >> 6] >> (i & 63)) & 1u; }
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
  }
  void check_pair(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }
  void same_order(const Graph& o) const {
    if (o.n_ != n_) throw std::invalid_argument("graphs have different orders");
  }

  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class EdgeWeight : std::uint8_t { none = 0, light = 1, heavy = 2 };

/// A weighted graph G = (L, H): light edges weigh 1, heavy edges weigh 2,
/// and the two edge sets are disjoint.
class WGraph {
 public:
  WGraph() = default;
  explicit WGraph(int n) : light_(n), heavy_(n) {}
  WGraph(Graph light, Graph heavy) : light_(std::move(light)), heavy_(std::move(heavy)) {
    if (light_.order() != heavy_.order())
      throw std::invalid_argument("light and heavy graphs have different orders");
    if (!light_.disjoint_from(heavy_))
      throw std::invalid_argument("light and heavy edge sets overlap");
  }

  int order() const noexcept { return light_.order(); }
  const Graph& light() const noexcept { return light_; }
  const Graph& heavy() const noexcept { return heavy_; }

  void add_light(Vertex u, Vertex v) {
    if (heavy_.has_edge(u, v)) throw std::invalid_argument("pair already heavy");
    light_.add_edge(u, v);
  }
  void add_heavy(Vertex u, Vertex v) {
    if (light_.has_edge(u, v)) throw std::invalid_argument("pair already light");
    heavy_.add_edge(u, v);
  }
  void add_edge(Vertex u, Vertex v, EdgeWeight w) {
    if (w == EdgeWeight::light) add_light(u, v);
    else if (w == EdgeWeight::heavy) add_heavy(u, v);
    else throw std::invalid_argument("edge weight must be light or heavy");
  }

  EdgeWeight weight(Vertex u, Vertex v) const {
    if (light_.has_edge(u, v)) return EdgeWeight::light;
    if (heavy_.has_edge(u, v)) return EdgeWeight::heavy;
    return EdgeWeight::none;
  }

  /// Union graph L ∪ H.
  Graph support() const { return light_ | heavy_; }

  WGraph relabeled(const std::vector<Vertex>& perm) const {
    return WGraph(light_.relabeled(perm), heavy_.relabeled(perm));
  }

  friend bool operator==(const WGraph&, const WGraph&) = default;

 private:
  Graph light_;
  Graph heavy_;
};

/// Target parameters (a, b, g): light degree, heavy degree, weighted girth.
struct Params {
  int a = 0;
  int b = 0;
  int g = 3;
  friend auto operator<=>(const Params&, const Params&) = default;
};

inline std::string to_string(const Params& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.g) + ")";
}

/// A nonnegative weight (girth, distance, order) or infinity.
class Extended {
 public:
  constexpr Extended() = default;
  constexpr explicit Extended(long long v) : v_(v) {
    if (v < 0) throw std::invalid_argument("extended value must be nonnegative");
  }
  static constexpr Extended infinite() noexcept {
    Extended e;
    e.v_ = kInf;
    return e;
  }

  constexpr bool is_finite() const noexcept { return v_ != kInf; }
  constexpr bool is_infinite() const noexcept { return v_ == kInf; }
  constexpr long long value() const {
    if (!is_finite()) throw std::logic_error("value of an infinite quantity");
    return v_;
  }

  std::string str() const { return is_finite() ? std::to_string(v_) : "inf"; }

  friend constexpr auto operator<=>(const Extended&, const Extended&) = default;
  friend constexpr bool operator==(const Extended&, const Extended&) = default;
  friend constexpr bool operator==(Extended a, long long b) noexcept {
    return a.is_finite() && a.v_ == b;
  }

 private:
  static constexpr long long kInf = std::numeric_limits<long long>::max();
  long long v_ = 0;
};

using GirthValue = Extended;

}  // namespace wcage
