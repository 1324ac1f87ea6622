#pragma once

// Existence of (a,b,g)-wgraphs and Moore-like lower bounds on n(a,b,g).
//
// The bounds count the vertices of a breadth-first wtree in which every
// vertex must be distinct. Level i holds L[i] light vertices (reached by a
// light edge) and H[i] heavy vertices (reached by a heavy edge, which skips a
// level):
//
//   L[i] = (a-1) L[i-1] + a H[i-1]
//   H[i] = (b-1) H[i-2] + b L[i-2]
//
// Odd girth uses the root as a light vertex; even girth extends one child of
// the root by an extra level, either a light child or a heavy child.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcage/checked.hpp"
#include "wcage/girth.hpp"
#include "wcage/graph.hpp"

namespace wcage {

/// True iff some (a,b,g)-wcycle exists, equivalently iff an (a,b,g)-wgraph exists.
inline bool wcycle_exists(const Params& p) {
  if (p.g < 3) throw std::invalid_argument("girth must be at least 3");
  if (p.a < 0 || p.b < 0) throw std::invalid_argument("degrees must be nonnegative");
  if (p.a >= 2) return true;
  if (p.a == 1 && p.b >= 2 && p.g >= 5) return true;
  if (p.a == 1 && p.b == 1 && p.g >= 6 && p.g % 3 == 0) return true;
  if (p.a == 0 && p.b >= 2 && p.g >= 6 && p.g % 2 == 0) return true;
  return false;
}

enum class TreeBase { odd, even_light, even_heavy };

struct MooreLevels {
  std::vector<long long> light;
  std::vector<long long> heavy;

  long long total() const {
    long long t = 0;
    for (std::size_t i = 0; i < light.size(); ++i) t = checked_add(t, checked_add(light[i], heavy[i]));
    return t;
  }
};

/// Levels 0..depth of the Moore-like wtree for the given base case.
inline MooreLevels levels(int a, int b, TreeBase base, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (a < 0 || b < 0) throw std::invalid_argument("degrees must be nonnegative");
  const auto size = static_cast<std::size_t>(depth) + 1;
  MooreLevels m{std::vector<long long>(size, 0), std::vector<long long>(size, 0)};
  switch (base) {
    case TreeBase::odd:
      m.light[0] = 1;
      m.light[1] = a;
      break;
    case TreeBase::even_light:
      m.light[0] = 2;
      m.light[1] = checked_mul(2, a - 1);
      break;
    case TreeBase::even_heavy:
      m.heavy[0] = 1;
      m.light[1] = a;
      m.heavy[1] = 1;
      break;
  }
  for (std::size_t i = 2; i < size; ++i) {
    m.light[i] = checked_add(checked_mul(a - 1, m.light[i - 1]), checked_mul(a, m.heavy[i - 1]));
    m.heavy[i] = checked_add(checked_mul(b - 1, m.heavy[i - 2]), checked_mul(b, m.light[i - 2]));
  }
  for (std::size_t i = 0; i < size; ++i)
    if (m.light[i] < 0 || m.heavy[i] < 0)
      throw std::domain_error("Moore-like levels are undefined for a=" + std::to_string(a) +
                              ", b=" + std::to_string(b));
  return m;
}

/// The parity correction: an odd count is impossible when a or b is odd.
inline long long parity_corrected(long long m, int a, int b) {
  return (m % 2 != 0 && (a % 2 != 0 || b % 2 != 0)) ? m + 1 : m;
}

/// n(a,b,g) >= a+b+1, and >= a+b+2 when ab is odd.
inline long long trivial_bound(int a, int b) {
  long long t = checked_add(checked_add(a, b), 1);
  return (static_cast<long long>(a) * b) % 2 != 0 ? t + 1 : t;
}

struct BoundReport {
  Params params;
  std::optional<long long> m1, m2, m3;
  std::optional<long long> m1_plus, m2_plus, m3_plus;
  long long trivial = 0;
  /// n0(a,b,g): M1+ for odd g, max(M2+, M3+) for even g; 0 when a = 0.
  long long moore = 0;
  /// max(M2+, M3+) for even g when both apply.
  std::optional<long long> even_max;
  long long combined = 0;
  bool exists = false;
};

inline BoundReport moore_bounds(const Params& p) {
  if (p.g < 3) throw std::invalid_argument("girth must be at least 3");
  if (p.a < 0 || p.b < 0) throw std::invalid_argument("degrees must be nonnegative");
  BoundReport r;
  r.params = p;
  r.exists = wcycle_exists(p);
  r.trivial = trivial_bound(p.a, p.b);
  if (p.a >= 1) {
    if (p.g % 2 != 0) {
      r.m1 = levels(p.a, p.b, TreeBase::odd, (p.g - 1) / 2).total();
      r.m1_plus = parity_corrected(*r.m1, p.a, p.b);
      r.moore = *r.m1_plus;
    } else {
      const int depth = (p.g - 2) / 2;
      r.m2 = levels(p.a, p.b, TreeBase::even_light, depth).total();
      r.m2_plus = parity_corrected(*r.m2, p.a, p.b);
      r.moore = *r.m2_plus;
      if (p.b >= 1) {
        r.m3 = levels(p.a, p.b, TreeBase::even_heavy, depth).total();
        r.m3_plus = parity_corrected(*r.m3, p.a, p.b);
        r.even_max = std::max(*r.m2_plus, *r.m3_plus);
        r.moore = *r.even_max;
      }
    }
  }
  r.combined = std::max(r.moore, r.trivial);
  return r;
}

/// The listed closed-form polynomials for the Moore-like bounds:
/// M1 for odd g in {3,...,11}, M2 for even g in {4,...,12}.
inline long long closed_form(int g, long long a, long long b) {
  auto p = [](long long x, int e) { return checked_pow(x, e); };
  auto m = [](long long x, long long y) { return checked_mul(x, y); };
  auto sum = [](std::initializer_list<long long> xs) {
    long long s = 0;
    for (long long x : xs) s = checked_add(s, x);
    return s;
  };
  switch (g) {
    case 3: return sum({a, 1});
    case 5: return sum({p(a, 2), b, 1});
    case 7: return sum({p(a, 3), -p(a, 2), m(2, m(a, b)), a, b, 1});
    case 9: return sum({p(a, 4), -m(2, p(a, 3)), m(3, m(p(a, 2), b)), m(2, p(a, 2)), p(b, 2), 1});
    case 11:
      return sum({p(a, 5), -m(3, p(a, 4)), m(4, m(p(a, 3), b)), m(4, p(a, 3)), -m(3, m(p(a, 2), b)),
                  m(3, m(a, p(b, 2))), -m(2, p(a, 2)), p(b, 2), a, 1});
    case 4: return m(2, a);
    case 6: return sum({m(2, p(a, 2)), -m(2, a), m(2, b), 2});
    case 8: return sum({m(2, p(a, 3)), -m(4, p(a, 2)), m(4, m(a, b)), m(4, a)});
    case 10:
      return sum({m(2, p(a, 4)), -m(6, p(a, 3)), m(6, m(p(a, 2), b)), m(8, p(a, 2)), -m(4, m(a, b)),
                  m(2, p(b, 2)), -m(4, a), 2});
    case 12:
      return sum({m(2, p(a, 5)), -m(8, p(a, 4)), m(8, m(p(a, 3), b)), m(14, p(a, 3)),
                  -m(12, m(p(a, 2), b)), m(6, m(a, p(b, 2))), -m(12, p(a, 2)), m(4, m(a, b)), m(6, a)});
    default:
      throw std::invalid_argument("no closed form for girth " + std::to_string(g));
  }
}

/// |G| - n0(a,b,g) for a verified (a,b,g)-wgraph.
inline long long excess(const WGraph& g, const Params& p) {
  if (!verify_witness(g, p)) throw std::invalid_argument("not an " + to_string(p) + "-wgraph");
  return g.order() - moore_bounds(p).moore;
}

/// Outcome of the closed-form special cases.
struct SpecialValue {
  enum class Status { not_applicable, unknown, known };
  Status status = Status::not_applicable;
  Extended value;

  bool known() const { return status == Status::known; }
};

/// Looks up the order n(r,g) of an ordinary (r,g)-cage.
using CageOrderLookup = std::function<std::optional<long long>(int r, int g)>;

/// n(a,b,g) where a closed case applies: nonexistence, n(1,1,g), n(a,0,g) =
/// n(a,g) and n(0,b,g) = n(b,g/2).
inline SpecialValue special_exact_value(const Params& p, const CageOrderLookup& cage_order) {
  using S = SpecialValue::Status;
  if (!wcycle_exists(p)) return {S::known, Extended::infinite()};
  auto from_cage = [&](int r, int g) -> SpecialValue {
    auto v = cage_order(r, g);
    if (!v) return {S::unknown, Extended::infinite()};
    return {S::known, Extended(*v)};
  };
  if (p.a == 1 && p.b == 1) return {S::known, Extended(2LL * p.g / 3)};
  if (p.b == 0) return from_cage(p.a, p.g);
  if (p.a == 0) return from_cage(p.b, p.g / 2);
  return {};
}

}  // namespace wcage
