#pragma once

// Canonical labelling of wgraphs by individualisation-refinement.
//
// The wgraph is treated as a complete graph with three edge colours (none,
// light, heavy). Ordered partitions are refined to the coarsest equitable
// partition with respect to light- and heavy-neighbour counts, then the
// first non-singleton cell is individualised vertex by vertex. Leaves are
// compared by their adjacency code; the lexicographically smallest code is
// the certificate. Automorphisms found at equal leaves prune children that
// lie in an orbit already explored under generators fixing the current
// individualised prefix.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wcage/graph.hpp"

namespace wcage {

struct CanonicalForm {
  /// position[v] is the canonical label of vertex v.
  std::vector<Vertex> position;
  std::string certificate;
};

namespace detail {

class Canonicalizer {
 public:
  Canonicalizer(const WGraph& g, const std::vector<int>& colors) : n_(g.order()) {
    const auto nn = static_cast<std::size_t>(n_);
    code_.assign(nn * nn, 0);
    adj_.resize(nn);
    for (auto [u, v] : g.light().edges()) set(u, v, 1);
    for (auto [u, v] : g.heavy().edges()) set(u, v, 2);
    colors_ = colors.empty() ? std::vector<int>(nn, 0) : colors;
    if (colors_.size() != nn) throw std::invalid_argument("colour vector has wrong length");
  }

  CanonicalForm run() {
    const auto nn = static_cast<std::size_t>(n_);
    Partition p;
    p.lab.resize(nn);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int x, int y) {
      return colors_[static_cast<std::size_t>(x)] < colors_[static_cast<std::size_t>(y)];
    });
    p.cell_start.assign(nn, 0);
    p.cell_end.assign(nn, 0);
    std::vector<int> splitters;
    for (std::size_t i = 0; i < nn;) {
      std::size_t j = i;
      while (j < nn && colors_[static_cast<std::size_t>(p.lab[j])] ==
                           colors_[static_cast<std::size_t>(p.lab[i])])
        ++j;
      for (std::size_t k = i; k < j; ++k) p.cell_start[k] = static_cast<int>(i);
      p.cell_end[i] = static_cast<int>(j);
      splitters.push_back(static_cast<int>(i));
      i = j;
    }
    p.rebuild_pos();
    refine(p, splitters);
    std::vector<int> prefix;
    search(p, prefix);

    CanonicalForm out;
    out.position.assign(nn, 0);
    for (std::size_t i = 0; i < nn; ++i)
      out.position[static_cast<std::size_t>(best_lab_[i])] = static_cast<Vertex>(i);
    out.certificate = "wc1:" + std::to_string(n_) + ":";
    for (std::size_t i = 0; i < nn; ++i) {
      out.certificate += std::to_string(colors_[static_cast<std::size_t>(best_lab_[i])]);
      out.certificate += ',';
    }
    out.certificate += ':';
    for (char c : best_code_) out.certificate += static_cast<char>('0' + c);
    return out;
  }

 private:
  struct Partition {
    std::vector<int> lab;         // position -> vertex
    std::vector<int> pos;         // vertex -> position
    std::vector<int> cell_start;  // position -> start of its cell
    std::vector<int> cell_end;    // start -> end (exclusive)
    void rebuild_pos() {
      pos.assign(lab.size(), 0);
      for (std::size_t i = 0; i < lab.size(); ++i) pos[static_cast<std::size_t>(lab[i])] = static_cast<int>(i);
    }
    bool discrete() const {
      for (std::size_t i = 0; i < lab.size(); ++i)
        if (cell_end[static_cast<std::size_t>(cell_start[i])] - cell_start[i] > 1) return false;
      return true;
    }
  };

  void set(int u, int v, std::uint8_t c) {
    const auto nn = static_cast<std::size_t>(n_);
    code_[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)] = c;
    code_[static_cast<std::size_t>(v) * nn + static_cast<std::size_t>(u)] = c;
    adj_[static_cast<std::size_t>(u)].push_back({v, c});
    adj_[static_cast<std::size_t>(v)].push_back({u, c});
  }

  // Refines `p` to an equitable partition, processing splitter cells in FIFO
  // order. Fragments of a split cell are ordered by increasing key and all of
  // them become splitters, so the result depends only on cell positions.
  void refine(Partition& p, std::vector<int> queue) const {
    const auto nn = static_cast<std::size_t>(n_);
    std::vector<int> count(nn, 0);
    std::vector<char> queued(nn, 0);
    for (int s : queue) queued[static_cast<std::size_t>(s)] = 1;
    std::vector<int> touched_cells;
    std::vector<int> cell_vertices;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int s = queue[qi];
      queued[static_cast<std::size_t>(s)] = 0;
      int e = p.cell_end[static_cast<std::size_t>(s)];
      touched_cells.clear();
      cell_vertices.assign(p.lab.begin() + s, p.lab.begin() + e);
      for (int w : cell_vertices)
        for (auto [v, c] : adj_[static_cast<std::size_t>(w)]) {
          count[static_cast<std::size_t>(v)] += (c == 1) ? 1 : (n_ + 1);
          int cs = p.cell_start[static_cast<std::size_t>(p.pos[static_cast<std::size_t>(v)])];
          if (p.cell_end[static_cast<std::size_t>(cs)] - cs > 1) touched_cells.push_back(cs);
        }
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
      for (int cs : touched_cells) {
        int ce = p.cell_end[static_cast<std::size_t>(cs)];
        auto first = p.lab.begin() + cs, last = p.lab.begin() + ce;
        std::stable_sort(first, last, [&](int x, int y) {
          return count[static_cast<std::size_t>(x)] < count[static_cast<std::size_t>(y)];
        });
        if (count[static_cast<std::size_t>(*first)] == count[static_cast<std::size_t>(*(last - 1))]) continue;
        bool was_queued = queued[static_cast<std::size_t>(cs)] != 0;
        int start = cs;
        for (int i = cs; i < ce; ++i) {
          p.pos[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = i;
          bool boundary = (i + 1 == ce) ||
                          count[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] !=
                              count[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i + 1)])];
          if (boundary) {
            for (int k = start; k <= i; ++k) p.cell_start[static_cast<std::size_t>(k)] = start;
            p.cell_end[static_cast<std::size_t>(start)] = i + 1;
            if (!(was_queued && start == cs) && !queued[static_cast<std::size_t>(start)]) {
              queue.push_back(start);
              queued[static_cast<std::size_t>(start)] = 1;
            }
            start = i + 1;
          }
        }
      }
      for (int w : cell_vertices)
        for (auto [v, c] : adj_[static_cast<std::size_t>(w)]) count[static_cast<std::size_t>(v)] = 0;
    }
  }

  std::string leaf_code(const Partition& p) const {
    const auto nn = static_cast<std::size_t>(n_);
    std::string s;
    s.reserve(nn * (nn > 0 ? nn - 1 : 0) / 2);
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = i + 1; j < nn; ++j)
        s.push_back(static_cast<char>(
            code_[static_cast<std::size_t>(p.lab[i]) * nn + static_cast<std::size_t>(p.lab[j])]));
    return s;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(from.size());
    bool identity = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
      gamma[static_cast<std::size_t>(from[i])] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  std::vector<int> orbits_fixing(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v), b = find(parent, gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(parent, v);
    return parent;
  }

  void search(const Partition& p, std::vector<int>& prefix) {
    if (p.discrete()) {
      std::string code = leaf_code(p);
      if (first_lab_.empty()) {
        first_lab_ = p.lab;
        first_code_ = code;
        best_lab_ = p.lab;
        best_code_ = std::move(code);
        return;
      }
      if (code == first_code_) record_automorphism(first_lab_, p.lab);
      else if (code == best_code_) record_automorphism(best_lab_, p.lab);
      else if (code < best_code_) {
        best_code_ = std::move(code);
        best_lab_ = p.lab;
      }
      return;
    }
    int target = -1;
    for (std::size_t i = 0; i < p.lab.size();) {
      int e = p.cell_end[i];
      if (e - static_cast<int>(i) > 1) {
        target = static_cast<int>(i);
        break;
      }
      i = static_cast<std::size_t>(e);
    }
    int end = p.cell_end[static_cast<std::size_t>(target)];
    std::vector<int> members(p.lab.begin() + target, p.lab.begin() + end);
    std::sort(members.begin(), members.end());
    std::vector<int> explored;
    for (int v : members) {
      if (!explored.empty()) {
        auto orbit = orbits_fixing(prefix);
        bool seen = std::any_of(explored.begin(), explored.end(), [&](int u) {
          return orbit[static_cast<std::size_t>(u)] == orbit[static_cast<std::size_t>(v)];
        });
        if (seen) continue;
      }
      explored.push_back(v);
      Partition child = p;
      // Individualise v: it becomes a singleton at the front of its cell.
      int at = child.pos[static_cast<std::size_t>(v)];
      std::swap(child.lab[static_cast<std::size_t>(at)], child.lab[static_cast<std::size_t>(target)]);
      child.pos[static_cast<std::size_t>(child.lab[static_cast<std::size_t>(at)])] = at;
      child.pos[static_cast<std::size_t>(v)] = target;
      child.cell_end[static_cast<std::size_t>(target)] = target + 1;
      for (int k = target + 1; k < end; ++k) child.cell_start[static_cast<std::size_t>(k)] = target + 1;
      child.cell_end[static_cast<std::size_t>(target + 1)] = end;
      prefix.push_back(v);
      refine(child, {target, target + 1});
      search(child, prefix);
      prefix.pop_back();
    }
  }

  int n_;
  std::vector<std::uint8_t> code_;
  std::vector<std::vector<std::pair<int, std::uint8_t>>> adj_;
  std::vector<int> colors_;
  std::vector<std::vector<int>> generators_;
  std::vector<int> first_lab_, best_lab_;
  std::string first_code_, best_code_;
};

}  // namespace detail

/// Canonical labelling; `colors` (optional) is an initial vertex colouring
/// that isomorphisms must preserve.
inline CanonicalForm canonical_form(const WGraph& g, const std::vector<int>& colors = {}) {
  return detail::Canonicalizer(g, colors).run();
}

/// Equal for two wgraphs iff some vertex bijection maps light edges to light
/// edges and heavy edges to heavy edges.
inline std::string canonical_certificate(const WGraph& g) {
  return canonical_form(g).certificate;
}

/// The canonically relabelled copy of g.
inline WGraph canonical_relabeling(const WGraph& g) {
  return g.relabeled(canonical_form(g).position);
}

/// 64-bit FNV-1a digest, printed as 16 hex digits.
inline std::string digest_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 15];
    h >>= 4;
  }
  return out;
}

}  // namespace wcage
