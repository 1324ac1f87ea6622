#pragma once

// Command implementations behind the wcage executable. Each command writes to
// the given streams and returns the process exit code, so tests can call
// them directly.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "wcage/canonical.hpp"
#include "wcage/catalog.hpp"
#include "wcage/constructions.hpp"
#include "wcage/moore.hpp"
#include "wcage/report.hpp"
#include "wcage/results.hpp"
#include "wcage/search.hpp"
#include "wcage/split.hpp"
#include "wcage/wgf.hpp"

namespace wcage::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBudgetExceeded = 2, kIoError = 3 };

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  /// Results database; no updates happen when unset.
  std::optional<std::string> db;
};

/// Accepts "100000", "1e8" and similar; must be a positive whole number.
inline std::uint64_t parse_budget(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad budget '" + s + "'");
  }
  if (used != s.size() || !(v >= 1) || v > 1.8e19 || std::floor(v) != v)
    throw std::invalid_argument("bad budget '" + s + "'");
  return static_cast<std::uint64_t>(v);
}

/// --db if given, else $WCAGE_DB.
inline std::optional<std::string> default_db(const std::optional<std::string>& flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("WCAGE_DB"); env && *env) return std::string(env);
  return std::nullopt;
}

namespace detail {

inline void emit(const Context& ctx, const nlohmann::json& j) { ctx.out << j.dump(2) << "\n"; }

inline void record(const Context& ctx, const ResultRecord& r) {
  if (!ctx.db) return;
  results_update(*ctx.db, {r});
}

inline std::string opt_str(const std::optional<long long>& v) { return v ? std::to_string(*v) : "n/a"; }

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

inline ResultRecord constructed_record(const Params& p, const WGraph& g, bool optimal) {
  ResultRecord r;
  r.params = p;
  r.provenance = Provenance::constructed;
  r.timestamp = utc_timestamp();
  r.upper = Extended(g.order());
  r.witness = to_wgf(g);
  const long long lb = moore_bounds(p).combined;
  if (optimal || lb == g.order()) {
    r.status = ResultStatus::exact;
    r.lower = g.order();
  } else {
    r.status = ResultStatus::bracketed;
    r.lower = lb;
  }
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------- bound

inline int cmd_bound(const Params& p, const Context& ctx) {
  auto r = moore_bounds(p);
  if (ctx.json) {
    detail::emit(ctx, bound_json(r));
    return kOk;
  }
  auto& o = ctx.out;
  o << "params " << to_string(p) << "\n";
  if (p.g % 2 == 1) {
    o << "M1 " << detail::opt_str(r.m1) << "  M1+ " << detail::opt_str(r.m1_plus) << "\n";
  } else {
    o << "M2 " << detail::opt_str(r.m2) << "  M2+ " << detail::opt_str(r.m2_plus) << "\n";
    o << "M3 " << detail::opt_str(r.m3) << "  M3+ " << detail::opt_str(r.m3_plus) << "\n";
  }
  o << "moore " << r.moore << "\n";
  o << "trivial " << r.trivial << "\n";
  o << "combined " << r.combined << "\n";
  o << (r.exists ? "exists" : "nonexistent") << "\n";
  return kOk;
}

// ---------------------------------------------------------------- exists

/// Without `n`, reports the existence characterization; with `n`, searches order n.
inline int cmd_exists(const Params& p, std::optional<int> n, const SearchConfig& cfg, const Context& ctx) {
  if (!n) {
    const bool e = wcycle_exists(p);
    if (ctx.json) {
      auto j = params_json(p);
      j["exists"] = e;
      detail::emit(ctx, j);
    } else {
      ctx.out << to_string(p) << (e ? " exists" : " nonexistent") << "\n";
    }
    return kOk;
  }
  auto r = exists_wgraph(p, *n, cfg);
  if (ctx.json) {
    detail::emit(ctx, order_json(p, *n, r));
  } else {
    ctx.out << to_string(p) << " n=" << *n << " " << to_string(r.status);
    if (!r.shortcut.empty()) ctx.out << " (" << r.shortcut << ")";
    ctx.out << " nodes=" << r.nodes << "\n";
    if (r.witness) ctx.out << to_wgf(*r.witness);
  }
  return r.status == OrderStatus::budget_exceeded ? kBudgetExceeded : kOk;
}

// ---------------------------------------------------------------- search

inline ResultRecord search_record(const SearchOutcome& o) {
  ResultRecord r;
  r.params = o.params;
  r.provenance = Provenance::searched;
  r.timestamp = utc_timestamp();
  switch (o.status) {
    case SearchStatus::nonexistent:
      r.status = ResultStatus::nonexistent;
      break;
    case SearchStatus::exact:
      r.status = ResultStatus::exact;
      r.lower = o.value.value();
      r.upper = o.value;
      r.witness = to_wgf(*o.witness);
      break;
    default:
      // Every order below `value` is exhausted or parity-infeasible.
      r.status = ResultStatus::bracketed;
      r.lower = o.value.value();
      break;
  }
  return r;
}

inline int cmd_search(const Params& p, const SearchConfig& cfg, const std::optional<std::string>& out_file,
                      const Context& ctx) {
  auto o = find_wcage(p, cfg);
  if (ctx.json) {
    detail::emit(ctx, search_json(o, !cfg.deterministic));
  } else {
    auto& s = ctx.out;
    s << "params " << to_string(p) << "\n";
    s << "status " << to_string(o.status) << "\n";
    s << "value " << o.value.str() << "\n";
    s << "lower_bound " << o.lower_bound << "\n";
    for (const auto& e : o.exhausted_orders) s << "exhausted n=" << e.n << " nodes=" << e.nodes << "\n";
    s << "nodes " << o.nodes << "\n";
    s << "prunes degree=" << o.prunes.degree << " girth=" << o.prunes.girth << " moore=" << o.prunes.moore
      << " canonical=" << o.prunes.canonical << "\n";
    if (o.witness) s << "witness order " << o.witness->order() << "\n";
    s << "wall_ms " << std::fixed << std::setprecision(1) << o.wall_ms << "\n";
  }
  if (o.witness && out_file) write_wgf_file(*out_file, *o.witness);
  detail::record(ctx, search_record(o));
  switch (o.status) {
    case SearchStatus::exact:
    case SearchStatus::nonexistent: return kOk;
    default: return kBudgetExceeded;
  }
}

// ---------------------------------------------------------------- construct

struct ConstructResult {
  /// Empty when the parameters admit no wgraph.
  std::optional<Construction> build;
  bool nonexistent = false;
  /// True for the optimal families, whose order is n(a,b,g).
  bool optimal = false;
  std::vector<std::string> notes;
};

/// Catalog-cage splits realizing exactly (a,b,g); the smallest one wins.
inline std::optional<Construction> construct_by_split(const Params& p, std::uint64_t budget,
                                                      std::vector<std::string>& notes) {
  std::optional<Construction> best;
  const int r = p.a + p.b;
  for (int h = (p.g + 1) / 2; h <= p.g; ++h) {
    if (!get_cage(r, h)) continue;
    FactorOptions opt;
    opt.node_budget = budget;
    try {
      auto s = split_catalog_cage(r, h, p.a, p.g, opt);
      if (!s) {
        notes.push_back("split (" + std::to_string(r) + "," + std::to_string(h) + ")-cage: no suitable factor found");
        continue;
      }
      if (!best || s->split.graph.order() < best->graph.order())
        best = wcage::detail::finish(s->split.graph, "split",
                                     "(" + std::to_string(r) + "," + std::to_string(h) + ")-cage/" + s->factor_source, p);
    } catch (const std::exception& e) {
      notes.push_back(std::string("split: ") + e.what());
    }
  }
  return best;
}

inline ConstructResult construct(const Params& p, const std::string& method, std::uint64_t budget = 200'000) {
  ConstructResult res;
  auto optimal = [&](std::optional<Construction> c) {
    if (!c) res.nonexistent = true;
    res.build = std::move(c);
    res.optimal = true;
    return res;
  };
  if (method == "g3") {
    if (p.g != 3) throw std::invalid_argument("g3 needs g = 3");
    return optimal(construct_g3(p.a, p.b));
  }
  if (method == "g4") {
    if (p.g != 4) throw std::invalid_argument("g4 needs g = 4");
    return optimal(construct_g4(p.a, p.b));
  }
  if (method == "g56") return optimal(construct_g56(p.a, p.b, p.g));
  if (method == "auto") {
    if (p.g == 3) return optimal(construct_g3(p.a, p.b));
    if (p.g == 4) return optimal(construct_g4(p.a, p.b));
    if (!wcycle_exists(p)) {
      res.nonexistent = true;
      return res;
    }
    if (g56_value(p.a, p.b, p.g)) return optimal(construct_g56(p.a, p.b, p.g));
  } else if (method != "split" && method != "bounds" && method != "thm34") {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
  if (!wcycle_exists(p)) {
    res.nonexistent = true;
    return res;
  }
  auto consider = [&](std::optional<Construction> c) {
    if (c && (!res.build || c->graph.order() < res.build->graph.order())) res.build = std::move(c);
  };
  if (method == "split" || method == "auto") consider(construct_by_split(p, budget, res.notes));
  if (method == "bounds" || method == "auto") {
    auto ub = upper_bound_builders(p);
    for (auto& b : ub.builds) consider(std::move(b));
    for (auto& n : ub.notes) res.notes.push_back(n);
  }
  if (method == "thm34" || (method == "auto" && !res.build)) {
    try {
      consider(build_thm_construction(p));
    } catch (const UnsupportedParameters& e) {
      res.notes.push_back(std::string("thm34: ") + e.what());
    }
  }
  return res;
}

inline int cmd_construct(const Params& p, const std::string& method, const std::optional<std::string>& out_file,
                         std::uint64_t budget, const Context& ctx) {
  auto res = construct(p, method, budget);
  if (res.nonexistent) {
    if (ctx.json) {
      auto j = params_json(p);
      j["status"] = "NONEXISTENT";
      detail::emit(ctx, j);
    } else {
      ctx.out << to_string(p) << " nonexistent\n";
    }
    ResultRecord r;
    r.params = p;
    r.status = ResultStatus::nonexistent;
    r.provenance = Provenance::constructed;
    r.timestamp = utc_timestamp();
    detail::record(ctx, r);
    return kOk;
  }
  if (!res.build) {
    if (ctx.json) {
      auto j = params_json(p);
      j["status"] = "UNSUPPORTED";
      j["notes"] = res.notes;
      detail::emit(ctx, j);
    } else {
      ctx.out << to_string(p) << " unsupported by method " << method << "\n";
      for (const auto& n : res.notes) ctx.out << "  " << n << "\n";
    }
    return kVerifyFailed;
  }
  const auto& c = *res.build;
  // Builders verify their output; checked again right before writing.
  if (!verify_witness(c.graph, p)) {
    ctx.err << "internal error: construction failed verification\n";
    return kVerifyFailed;
  }
  auto prov = provenance_json(c);
  if (out_file) {
    write_wgf_file(*out_file, c.graph);
    detail::write_text(*out_file + ".provenance.json", prov.dump(2) + "\n");
  }
  if (ctx.json) {
    prov["optimal"] = res.optimal;
    prov["notes"] = res.notes;
    detail::emit(ctx, prov);
  } else {
    ctx.out << to_string(p) << " order " << c.graph.order() << " builder " << c.builder << " case " << c.case_tag
            << (res.optimal ? " (optimal)" : "") << "\n";
  }
  detail::record(ctx, detail::constructed_record(p, c.graph, res.optimal));
  return kOk;
}

// ---------------------------------------------------------------- verify

inline int cmd_verify(const std::string& file, const Params& p, const Context& ctx) {
  WGraph g = read_wgf_file(file);
  auto problems = witness_violations(g, p);
  auto gi = wgirth(g);
  if (ctx.json) {
    auto j = params_json(p);
    j["ok"] = problems.empty();
    j["order"] = g.order();
    j["girth"] = ext_json(gi);
    j["problems"] = problems;
    detail::emit(ctx, j);
  } else if (problems.empty()) {
    ctx.out << "OK " << to_string(p) << " order " << g.order() << "\n";
  } else {
    ctx.out << "FAIL girth=" << gi.str() << "\n";
    for (const auto& s : problems) ctx.out << "  " << s << "\n";
  }
  return problems.empty() ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- table

enum class CellPolicy { search, construct, db_only };

struct TableSpec {
  int g = 5;
  int a_lo = 1, a_hi = 2;
  int b_lo = 1, b_hi = 8;
  CellPolicy policy = CellPolicy::search;
  std::uint64_t budget = 100'000'000;
};

struct Cell {
  Params params;
  std::optional<Extended> value;  // empty: unresolved
  bool budget_hit = false;
  std::optional<long long> excess;
  std::optional<Extended> published;
};

/// "*" for excess 2, "^" for excess 4.
inline std::string marker(const std::optional<long long>& excess) {
  if (excess == 2) return "*";
  if (excess == 4) return "^";
  return "";
}

inline Cell fill_cell(const Params& p, const TableSpec& spec, const ResultSet& db, const SearchConfig& base) {
  Cell c;
  c.params = p;
  c.published = published_value(p);
  auto sv = special_exact_value(p);
  if (sv.known()) c.value = sv.value;
  else if (spec.policy == CellPolicy::db_only) {
    auto it = db.find(p);
    if (it != db.end() && it->second.status == ResultStatus::exact) c.value = Extended(it->second.lower);
    if (it != db.end() && it->second.status == ResultStatus::nonexistent) c.value = Extended::infinite();
  } else if (spec.policy == CellPolicy::construct) {
    std::optional<Construction> b;
    if (p.g == 3) b = construct_g3(p.a, p.b);
    else if (p.g == 4) b = construct_g4(p.a, p.b);
    else if (g56_value(p.a, p.b, p.g)) b = construct_g56(p.a, p.b, p.g);
    if (b) c.value = Extended(b->graph.order());
  } else {
    SearchConfig cfg = base;
    cfg.node_budget = spec.budget;
    auto o = find_wcage(p, cfg);
    if (o.status == SearchStatus::exact || o.status == SearchStatus::nonexistent) c.value = o.value;
    else c.budget_hit = true;
  }
  if (c.value && c.value->is_finite() && p.a >= 1) c.excess = c.value->value() - moore_bounds(p).moore;
  return c;
}

inline int cmd_table(const TableSpec& spec, const SearchConfig& base, const Context& ctx) {
  if (spec.a_lo > spec.a_hi || spec.b_lo > spec.b_hi) throw std::invalid_argument("empty table range");
  if (spec.budget == 0) throw std::invalid_argument("budget must be positive");
  ResultSet db;
  if (spec.policy == CellPolicy::db_only) {
    if (!ctx.db) throw std::invalid_argument("db-only tables need --db or WCAGE_DB");
    db = results_load(*ctx.db);
  }
  std::vector<Cell> cells;
  std::vector<std::string> mismatches;
  bool budget_hit = false;
  for (int a = spec.a_lo; a <= spec.a_hi; ++a)
    for (int b = spec.b_lo; b <= spec.b_hi; ++b) {
      cells.push_back(fill_cell({a, b, spec.g}, spec, db, base));
      const auto& c = cells.back();
      budget_hit = budget_hit || c.budget_hit;
      if (c.value && c.published && *c.value != *c.published)
        mismatches.push_back(to_string(c.params) + ": computed " + c.value->str() + ", published " + c.published->str());
    }
  if (ctx.json) {
    nlohmann::json j;
    j["g"] = spec.g;
    j["cells"] = nlohmann::json::array();
    for (const auto& c : cells) {
      nlohmann::json cj = params_json(c.params);
      cj["value"] = c.value ? ext_json(*c.value) : nlohmann::json(nullptr);
      cj["excess"] = opt_json(c.excess);
      cj["marker"] = marker(c.excess);
      cj["published"] = c.published ? ext_json(*c.published) : nlohmann::json(nullptr);
      j["cells"].push_back(cj);
    }
    j["mismatches"] = mismatches;
    detail::emit(ctx, j);
  } else {
    auto& o = ctx.out;
    o << "n(a,b," << spec.g << ")\n";
    o << std::setw(5) << "a\\b";
    for (int b = spec.b_lo; b <= spec.b_hi; ++b) o << std::setw(6) << b;
    o << "\n";
    std::size_t i = 0;
    for (int a = spec.a_lo; a <= spec.a_hi; ++a) {
      o << std::setw(5) << a;
      for (int b = spec.b_lo; b <= spec.b_hi; ++b, ++i) {
        const auto& c = cells[i];
        o << std::setw(6) << (c.value ? c.value->str() + marker(c.excess) : "");
      }
      o << "\n";
    }
    o << "markers: * excess 2, ^ excess 4\n";
    for (const auto& m : mismatches) o << "MISMATCH " << m << "\n";
  }
  if (!mismatches.empty()) return kVerifyFailed;
  return budget_hit ? kBudgetExceeded : kOk;
}

// ---------------------------------------------------------------- split

struct SplitRequest {
  int r = 3;
  int g = 5;
  /// Degree of the factor to find.
  int factor = 1;
  /// The factor becomes the heavy part instead of the light part.
  bool heavy = false;
  /// Girth lower bound on the light part (0: none).
  int min_girth = 0;
  /// Accept only splits of this weighted girth.
  std::optional<int> girth;
  std::uint64_t budget = 5'000'000;
};

inline int cmd_split(const SplitRequest& q, const std::optional<std::string>& out_file, const Context& ctx) {
  if (q.factor < 0 || q.factor > q.r) throw std::invalid_argument("factor degree must lie in [0, r]");
  const int light = q.heavy ? q.r - q.factor : q.factor;
  FactorOptions opt;
  opt.min_girth = q.min_girth;
  opt.node_budget = q.budget;
  auto s = split_catalog_cage(q.r, q.g, light, q.girth, opt);
  if (!s) {
    if (ctx.json) {
      nlohmann::json j{{"r", q.r}, {"g", q.g}, {"a", light}, {"status", "NO_FACTOR"}};
      detail::emit(ctx, j);
    } else {
      ctx.out << "no suitable " << light << "-factor found\n";
    }
    return kBudgetExceeded;
  }
  const auto& sp = s->split;
  if (ctx.json) {
    auto j = split_json(sp);
    j["factor_source"] = s->factor_source;
    j["cage"] = {q.r, q.g};
    detail::emit(ctx, j);
  } else {
    ctx.out << "(" << sp.a << "," << sp.b << "," << sp.girth.str() << ") order " << sp.graph.order()
            << " factor from " << s->factor_source << " window [" << sp.window_low << "," << sp.window_high << "]\n";
  }
  if (out_file) write_wgf_file(*out_file, sp.graph);
  if (sp.girth.is_finite()) {
    const Params p{sp.a, sp.b, static_cast<int>(sp.girth.value())};
    detail::record(ctx, detail::constructed_record(p, sp.graph, false));
  }
  return kOk;
}

// ---------------------------------------------------------------- catalog

inline int cmd_catalog_list(const Context& ctx) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& nc : named_cages()) {
    auto c = get_cage(nc.r, nc.g);
    const bool ok = c && cage_violations(*c).empty();
    if (ctx.json) {
      arr.push_back({{"name", nc.name},
                     {"r", nc.r},
                     {"g", nc.g},
                     {"order", nc.order},
                     {"hamiltonian_cycle", c && c->hamiltonian_cycle.has_value()},
                     {"verified", ok}});
    } else {
      ctx.out << std::left << std::setw(20) << nc.name << std::right << " r=" << nc.r << " g=" << std::setw(2) << nc.g
              << " n=" << std::setw(3) << nc.order << (c && c->hamiltonian_cycle ? " ham" : "    ")
              << (ok ? " verified" : " FAILED") << "\n";
    }
  }
  if (ctx.json) {
    nlohmann::json j;
    j["cages"] = arr;
    j["families"] = {"K_{r+1} (g=3)", "K_{r,r} (g=4)", "C_g (r=2)"};
    detail::emit(ctx, j);
  } else {
    ctx.out << "families: K_{r+1} (g=3), K_{r,r} (g=4), C_g (r=2)\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- seed

/// Writes the published table values into the database. Blank squares get the
/// best available construction as their upper bound.
inline int cmd_seed(const Context& ctx) {
  if (!ctx.db) throw std::invalid_argument("seed needs --db or WCAGE_DB");
  std::vector<ResultRecord> optimal;
  auto upper = [&optimal](const Params& p) {
    auto res = construct(p, "auto", 200'000);
    if (res.build && res.optimal) optimal.push_back(detail::constructed_record(p, res.build->graph, true));
    return res.build ? Extended(res.build->graph.order()) : Extended::infinite();
  };
  auto recs = published_seed(upper);
  for (auto& r : optimal) {
    r.timestamp = kSeedTimestamp;
    recs.push_back(std::move(r));
  }
  auto set = results_update(*ctx.db, recs);
  ctx.out << "seeded " << recs.size() << " records; database holds " << set.size() << "\n";
  return kOk;
}

}  // namespace wcage::cli
