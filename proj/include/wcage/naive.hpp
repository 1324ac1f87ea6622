#pragma once

// Brute-force oracle for tiny orders. Every pair {u,v} gets none/light/heavy,
// row by row. Degrees may never exceed (a,b), and a finished row must have
// exactly a light and b heavy entries. The girth is checked at the leaves only.

#include <optional>
#include <stdexcept>
#include <vector>

#include "wcage/girth.hpp"
#include "wcage/graph.hpp"

namespace wcage {

inline constexpr int kNaiveMaxOrder = 7;

inline std::optional<WGraph> naive_enumerate(const Params& p, int n) {
  if (n < 1 || n > kNaiveMaxOrder)
    throw std::invalid_argument("naive enumeration supports 1 <= n <= " + std::to_string(kNaiveMaxOrder));
  std::vector<int> w(static_cast<std::size_t>(n * n), 0);
  std::vector<int> dl(static_cast<std::size_t>(n), 0), dh(static_cast<std::size_t>(n), 0);
  std::optional<WGraph> found;

  auto at = [&](int u, int v) -> int& { return w[static_cast<std::size_t>(u * n + v)]; };

  // Assign pair (u,v) for v > u; row u is complete after v = n-1.
  auto rec = [&](auto&& self, int u, int v) -> bool {
    if (u == n) {
      WGraph g(n);
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          if (at(x, y) == 1) g.add_light(x, y);
          if (at(x, y) == 2) g.add_heavy(x, y);
        }
      if (verify_witness(g, p)) {
        found = std::move(g);
        return true;
      }
      return false;
    }
    if (v == n) {
      if (dl[static_cast<std::size_t>(u)] != p.a || dh[static_cast<std::size_t>(u)] != p.b) return false;
      return self(self, u + 1, u + 2);
    }
    for (int c = 0; c < 3; ++c) {
      auto& cu = c == 1 ? dl[static_cast<std::size_t>(u)] : dh[static_cast<std::size_t>(u)];
      auto& cv = c == 1 ? dl[static_cast<std::size_t>(v)] : dh[static_cast<std::size_t>(v)];
      if (c != 0) {
        const int cap = c == 1 ? p.a : p.b;
        if (cu == cap || cv == cap) continue;
        ++cu;
        ++cv;
      }
      at(u, v) = c;
      bool done = self(self, u, v + 1);
      at(u, v) = 0;
      if (c != 0) {
        --cu;
        --cv;
      }
      if (done) return true;
    }
    return false;
  };
  rec(rec, 0, 1);
  return found;
}

}  // namespace wcage
