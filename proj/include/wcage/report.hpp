#pragma once

// JSON views of library results. nlohmann objects keep keys sorted, so
// dumps are stable.

#include <string>

#include "json.hpp"

#include "wcage/canonical.hpp"
#include "wcage/constructions.hpp"
#include "wcage/moore.hpp"
#include "wcage/search.hpp"
#include "wcage/split.hpp"
#include "wcage/wgf.hpp"

namespace wcage {

inline nlohmann::json ext_json(const Extended& e) {
  if (e.is_finite()) return e.value();
  return "inf";
}

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  if (v) return *v;
  return nullptr;
}

inline nlohmann::json params_json(const Params& p) { return {{"a", p.a}, {"b", p.b}, {"g", p.g}}; }

inline nlohmann::json bound_json(const BoundReport& r) {
  nlohmann::json j = params_json(r.params);
  j["m1"] = opt_json(r.m1);
  j["m2"] = opt_json(r.m2);
  j["m3"] = opt_json(r.m3);
  j["m1_plus"] = opt_json(r.m1_plus);
  j["m2_plus"] = opt_json(r.m2_plus);
  j["m3_plus"] = opt_json(r.m3_plus);
  j["even_max"] = opt_json(r.even_max);
  j["trivial"] = r.trivial;
  j["moore"] = r.moore;
  j["combined"] = r.combined;
  j["exists"] = r.exists;
  return j;
}

inline nlohmann::json prunes_json(const PruneStats& s) {
  return {{"degree", s.degree}, {"girth", s.girth}, {"moore", s.moore}, {"canonical", s.canonical}};
}

/// Wall time is left out unless asked for, so equal searches dump equal bytes.
inline nlohmann::json search_json(const SearchOutcome& o, bool with_timing = false) {
  nlohmann::json j = params_json(o.params);
  j["status"] = to_string(o.status);
  j["value"] = ext_json(o.value);
  j["lower_bound"] = o.lower_bound;
  j["witness"] = o.witness ? nlohmann::json(to_wgf(*o.witness)) : nlohmann::json(nullptr);
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& e : o.exhausted_orders) ex.push_back({{"n", e.n}, {"nodes", e.nodes}});
  j["exhausted_orders"] = ex;
  j["nodes"] = o.nodes;
  j["prunes"] = prunes_json(o.prunes);
  if (with_timing) j["wall_ms"] = o.wall_ms;
  return j;
}

inline std::string to_string(OrderStatus s) {
  switch (s) {
    case OrderStatus::found: return "FOUND";
    case OrderStatus::proven_none: return "PROVEN_NONE";
    case OrderStatus::budget_exceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

inline nlohmann::json order_json(const Params& p, int n, const OrderOutcome& o) {
  nlohmann::json j = params_json(p);
  j["n"] = n;
  j["status"] = to_string(o.status);
  j["witness"] = o.witness ? nlohmann::json(to_wgf(*o.witness)) : nlohmann::json(nullptr);
  j["nodes"] = o.nodes;
  j["prunes"] = prunes_json(o.prunes);
  j["shortcut"] = o.shortcut.empty() ? nlohmann::json(nullptr) : nlohmann::json(o.shortcut);
  return j;
}

/// The provenance sidecar written next to constructed WGF files.
inline nlohmann::json provenance_json(const Construction& c) {
  nlohmann::json j = params_json(c.params);
  j["builder"] = c.builder;
  j["case"] = c.case_tag;
  j["order"] = c.graph.order();
  return j;
}

inline nlohmann::json split_json(const SplitResult& s) {
  return {{"a", s.a},
          {"b", s.b},
          {"girth", ext_json(s.girth)},
          {"order", s.graph.order()},
          {"host_girth", s.host_girth},
          {"window", {s.window_low, s.window_high}},
          {"certificate", digest_hex(canonical_certificate(s.graph))}};
}

}  // namespace wcage
