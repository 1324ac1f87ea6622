#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "wcage/cli.hpp"

namespace {

void add_params(CLI::App* cmd, wcage::Params& p) {
  cmd->add_option("a", p.a, "light degree")->required();
  cmd->add_option("b", p.b, "heavy degree")->required();
  cmd->add_option("g", p.g, "weighted girth")->required();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace wcage;
  CLI::App app{"Weighted cages: bounds, constructions and exhaustive search"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::optional<std::string> db;
  std::string budget = "1e8";
  int workers = 1;
  std::optional<std::string> out;
  app.add_flag("--json", json, "print JSON");
  app.add_option("--db", db, "results database (default $WCAGE_DB)");
  app.add_option("--budget", budget, "node budget, e.g. 1e8");
  app.add_option("--workers", workers, "search threads")->check(CLI::Range(1, 256));
  app.add_option("--out", out, "write the resulting wgraph (WGF)");

  Params p;
  auto* bound = app.add_subcommand("bound", "Moore-like and trivial lower bounds");
  add_params(bound, p);

  std::optional<int> order;
  auto* exists = app.add_subcommand("exists", "existence, or search of a single order");
  add_params(exists, p);
  exists->add_option("n", order, "order to search");

  auto* search = app.add_subcommand("search", "determine n(a,b,g) by exhaustive search");
  add_params(search, p);

  std::string method = "auto";
  auto* construct = app.add_subcommand("construct", "build an (a,b,g)-wgraph");
  add_params(construct, p);
  construct->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "g3", "g4", "g56", "thm34", "bounds", "split"}));

  std::string file;
  auto* verify = app.add_subcommand("verify", "check a WGF file against (a,b,g)");
  verify->add_option("file", file)->required();
  add_params(verify, p);

  cli::TableSpec spec;
  std::string a_range = "1..2", b_range = "1..8", policy = "search";
  auto* table = app.add_subcommand("table", "regenerate a table of n(a,b,g)");
  table->add_option("g", spec.g)->required();
  table->add_option("--a", a_range, "range lo..hi");
  table->add_option("--b", b_range, "range lo..hi");
  table->add_option("--policy", policy)->check(CLI::IsMember({"search", "construct", "db"}));

  cli::SplitRequest split;
  auto* split_cmd = app.add_subcommand("split", "split a catalog cage into light and heavy parts");
  split_cmd->add_option("r", split.r)->required();
  split_cmd->add_option("g", split.g)->required();
  split_cmd->add_option("--factor", split.factor, "degree of the factor")->required();
  split_cmd->add_flag("--heavy", split.heavy, "the factor is the heavy part");
  split_cmd->add_option("--min-girth", split.min_girth, "girth bound for the light part");
  split_cmd->add_option("--girth", split.girth, "required weighted girth");

  auto* catalog = app.add_subcommand("catalog", "known cages");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "list catalog cages");

  auto* seed = app.add_subcommand("seed", "write the published table values into the database");
  seed->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kIoError;
  }

  cli::Context ctx{std::cout, std::cerr, json, cli::default_db(db)};
  try {
    const std::uint64_t nodes = cli::parse_budget(budget);
    SearchConfig cfg;
    cfg.node_budget = nodes;
    cfg.worker_count = workers;
    if (*bound) return cli::cmd_bound(p, ctx);
    if (*exists) return cli::cmd_exists(p, order, cfg, ctx);
    if (*search) return cli::cmd_search(p, cfg, out, ctx);
    if (*construct) return cli::cmd_construct(p, method, out, nodes, ctx);
    if (*verify) return cli::cmd_verify(file, p, ctx);
    if (*table) {
      auto range = [](const std::string& s, int& lo, int& hi) {
        auto dots = s.find("..");
        if (dots == std::string::npos) lo = hi = std::stoi(s);
        else {
          lo = std::stoi(s.substr(0, dots));
          hi = std::stoi(s.substr(dots + 2));
        }
      };
      range(a_range, spec.a_lo, spec.a_hi);
      range(b_range, spec.b_lo, spec.b_hi);
      spec.policy = policy == "search"      ? cli::CellPolicy::search
                    : policy == "construct" ? cli::CellPolicy::construct
                                            : cli::CellPolicy::db_only;
      spec.budget = nodes;
      return cli::cmd_table(spec, cfg, ctx);
    }
    if (*split_cmd) {
      if (app.count("--budget")) split.budget = nodes;
      return cli::cmd_split(split, out, ctx);
    }
    if (*catalog_list) return cli::cmd_catalog_list(ctx);
    if (*seed) return cli::cmd_seed(ctx);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kIoError;
  }
  return cli::kIoError;
}
