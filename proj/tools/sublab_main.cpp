#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sublab/report.hpp"

namespace {

using sublab::CatalogEntry;
using sublab::Fixture;
using sublab::Json;

std::string default_data_dir() {
  if (const char* env = std::getenv("SUBLAB_DATA")) return env;
#ifdef SUBLAB_DEFAULT_DATA_DIR
  return SUBLAB_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

struct Context {
  std::string data_dir;
  std::optional<long> n;
  sublab::DecomposeOptions opt;
  std::string out;
  std::string format = "json";
  std::string expect;

  std::vector<CatalogEntry> catalog;
  std::vector<Fixture> fixtures;

  void load() {
    catalog = sublab::load_catalog(data_dir + "/onishchik.catalog");
    fixtures = sublab::load_fixtures(data_dir + "/table1.fixtures", catalog);
  }

  const Fixture& fixture(const std::string& id) const {
    for (const auto& f : fixtures)
      if (f.id == id) return f;
    std::string known;
    for (const auto& f : fixtures) {
      if (!known.empty()) known += ", ";
      known += f.id;
    }
    throw sublab::InputError("unknown fixture '" + id + "' (known: " + known +
                             ")");
  }

  const CatalogEntry& row_of(const Fixture& f) const {
    return catalog.at(f.row - 1);
  }

  /// n for a single fixture run; must lie in the fixture's declared range.
  std::size_t pick_n(const Fixture& f, bool obstruction_range) const {
    std::size_t lo = f.n_min, hi = f.n_max;
    if (obstruction_range && f.obstruct_n_min > 0) {
      lo = f.obstruct_n_min;
      hi = f.obstruct_n_max;
    }
    if (!n) return lo;
    if (*n < 1 || static_cast<std::size_t>(*n) < lo ||
        static_cast<std::size_t>(*n) > hi)
      throw sublab::InputError(
          "fixture '" + f.id + "' covers n in [" + std::to_string(lo) + ", " +
          std::to_string(hi) + "], got " + std::to_string(*n));
    return static_cast<std::size_t>(*n);
  }

  void emit(const Json& report) const {
    std::string text = format == "text" ? sublab::render_text(report)
                                        : report.dump(2) + "\n";
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out);
      if (!file)
        throw sublab::InputError("cannot open output file: " + out);
      file << text;
    }
  }
};

bool verdict_negative_single(const Json& report) {
  if (report.contains("verdict") && report["verdict"].is_object() &&
      report["verdict"].value("is_riemannian_submersion", true) == false)
    return true;
  if (report.contains("metric") && report["metric"].is_object() &&
      report["metric"].value("constants_ok", true) == false)
    return true;
  return false;
}

int cmd_decompose(Context& ctx, const std::string& fixture_id, long row_index,
                  const std::string& l_label) {
  Fixture fx;
  const CatalogEntry* row = nullptr;
  std::size_t n = 0;
  if (!fixture_id.empty()) {
    fx = ctx.fixture(fixture_id);
    row = &ctx.row_of(fx);
    n = ctx.pick_n(fx, false);
  } else {
    if (row_index < 1 ||
        static_cast<std::size_t>(row_index) > ctx.catalog.size())
      throw sublab::InputError("--row must name a catalog row between 1 and " +
                               std::to_string(ctx.catalog.size()));
    row = &ctx.catalog[static_cast<std::size_t>(row_index) - 1];
    fx.id = "row-" + std::to_string(row_index);
    fx.row = static_cast<std::size_t>(row_index);
    fx.l = l_label;
    fx.base = row->space;
    fx.expect = "submersion";
    n = ctx.n ? static_cast<std::size_t>(std::max(1L, *ctx.n)) : 3;
    fx.n_min = fx.n_max = n;
  }
  Json report = sublab::run_fixture(*row, fx, n, ctx.opt,
                                    sublab::ReportSections::decompose_only());
  ctx.emit(report);
  return 0;
}

int cmd_check(Context& ctx, const std::string& fixture_id) {
  const Fixture& fx = ctx.fixture(fixture_id);
  std::size_t n = ctx.pick_n(fx, false);
  Json report = sublab::run_fixture(ctx.row_of(fx), fx, n, ctx.opt);
  ctx.emit(report);
  return verdict_negative_single(report) ? 1 : 0;
}

int cmd_metric(Context& ctx, const std::string& fixture_id) {
  const Fixture& fx = ctx.fixture(fixture_id);
  std::size_t n = ctx.pick_n(fx, false);
  Json report = sublab::run_fixture(ctx.row_of(fx), fx, n, ctx.opt,
                                    sublab::ReportSections::metric_only());
  bool negative = false;
  if (report.contains("metric") && report["metric"].is_object()) {
    const Json& m = report["metric"];
    negative = m.value("constants_ok", true) == false ||
               m.value("positive_definite", true) == false;
  }
  ctx.emit(report);
  return negative ? 1 : 0;
}

int cmd_obstruct(Context& ctx, const std::string& fixture_id,
                 const std::string& total_label,
                 const std::string& base_expr) {
  Json report;
  report["version"] = "1";
  if (!fixture_id.empty()) {
    const Fixture& fx = ctx.fixture(fixture_id);
    if (fx.obstruct.empty())
      throw sublab::InputError("fixture '" + fx.id +
                               "' has no obstruction target");
    std::size_t n = ctx.pick_n(fx, true);
    report["obstruction"] = sublab::framed_obstruction(
        sublab::group_descriptor(ctx.row_of(fx).g, n),
        sublab::parse_space(fx.obstruct, n));
  } else {
    if (total_label.empty() || base_expr.empty())
      throw sublab::InputError(
          "obstruct needs either --fixture or both --total and --base");
    std::size_t n =
        ctx.n ? static_cast<std::size_t>(std::max(1L, *ctx.n)) : 1;
    report["obstruction"] =
        sublab::framed_obstruction(sublab::group_descriptor(total_label, n),
                                   sublab::parse_space(base_expr, n));
  }
  ctx.emit(report);
  return report["obstruction"]["verdict"] == "certificate" ? 0 : 1;
}

int cmd_catalog_list(Context& ctx) {
  if (ctx.format == "text") {
    std::string text;
    for (const auto& row : ctx.catalog) {
      text += row.g + " | " + row.k1 + " | " + row.k2 + " | " + row.h +
              " | " + row.space + " | " + (row.symmetric ? "yes" : "no") +
              " | " + (row.supported ? "yes" : "no") + "\n";
    }
    if (ctx.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(ctx.out);
      if (!file)
        throw sublab::InputError("cannot open output file: " + ctx.out);
      file << text;
    }
    return 0;
  }
  Json rows = Json::array();
  for (const auto& row : ctx.catalog) {
    Json j;
    j["index"] = row.index;
    j["g"] = row.g;
    j["k1"] = row.k1;
    j["k2"] = row.k2;
    j["h"] = row.h;
    j["space"] = row.space;
    j["symmetric"] = row.symmetric;
    j["supported"] = row.supported;
    rows.push_back(j);
  }
  Json report;
  report["version"] = "1";
  report["catalog"] = rows;
  ctx.emit(report);
  return 0;
}

int cmd_sweep(Context& ctx, const std::string& fixture_id, long n_min_arg,
              long n_max_arg, bool obstruct_only, bool parallel) {
  const Fixture& fx = ctx.fixture(fixture_id);
  std::size_t lo = fx.n_min, hi = fx.n_max;
  if (obstruct_only) {
    if (fx.obstruct.empty())
      throw sublab::InputError("fixture '" + fx.id +
                               "' has no obstruction target");
    if (fx.obstruct_n_min > 0) {
      lo = fx.obstruct_n_min;
      hi = fx.obstruct_n_max;
    }
  }
  if (n_min_arg > 0) lo = static_cast<std::size_t>(n_min_arg);
  if (n_max_arg > 0) hi = static_cast<std::size_t>(n_max_arg);
  Json report = sublab::sweep_fixture(ctx.row_of(fx), fx, lo, hi, ctx.opt,
                                      obstruct_only, parallel);
  ctx.emit(report);
  return report["summary"]["all_ok"] == true ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact verification of isotropy decompositions, induced metrics and "
      "quotient obstructions for compact homogeneous chains"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.data_dir = default_data_dir();
  long n_flag = 0;
  app.add_option("--data", ctx.data_dir, "data directory");
  auto* n_opt = app.add_option("--n", n_flag, "parameter n");
  app.add_option("--seed", ctx.opt.seed, "float cross-check seed")
      ->envname("SUBLAB_SEED");
  app.add_option("--tol", ctx.opt.tol, "float cross-check tolerance")
      ->envname("SUBLAB_TOL");
  app.add_option("--out", ctx.out, "write the report to this file");
  app.add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--expect", ctx.expect,
                 "assert the outcome: pass expects exit 0, fail expects the "
                 "negative-verdict exit 1")
      ->check(CLI::IsMember({"pass", "fail"}));

  std::string fixture_id, l_label, total_label, base_expr;
  long row_index = 0, n_min_arg = 0, n_max_arg = 0;
  bool obstruct_only = false, parallel = false;

  auto* decompose =
      app.add_subcommand("decompose", "isotropy decomposition of k2 minus h");
  decompose->add_option("--fixture", fixture_id, "fixture id");
  decompose->add_option("--row", row_index, "catalog row (1-based)");
  decompose->add_option("--l", l_label,
                        "intermediate subalgebra label for --row");

  auto* check = app.add_subcommand(
      "check-submersion", "full verification of one fixture at one n");
  check->add_option("--fixture", fixture_id, "fixture id")->required();

  auto* metric = app.add_subcommand(
      "metric-constants", "scaling constants of the induced metric");
  metric->add_option("--fixture", fixture_id, "fixture id")->required();

  auto* obstruct = app.add_subcommand(
      "obstruct", "nonexistence certificate for a free quotient");
  obstruct->add_option("--fixture", fixture_id, "fixture id");
  obstruct->add_option("--total", total_label,
                       "total group label, e.g. so(16)");
  obstruct->add_option("--base", base_expr,
                       "base space, e.g. stiefel(3,11)");

  auto* catalog = app.add_subcommand("catalog", "catalog inspection");
  catalog->require_subcommand(1);
  auto* catalog_list =
      catalog->add_subcommand("list", "print all catalog rows");

  auto* sweep =
      app.add_subcommand("sweep", "run one fixture across an n range");
  sweep->add_option("--fixture", fixture_id, "fixture id")->required();
  sweep->add_option("--n-min", n_min_arg, "first n");
  sweep->add_option("--n-max", n_max_arg, "last n");
  sweep->add_flag("--obstruct-only", obstruct_only,
                  "only run the obstruction pipeline");
  sweep->add_flag("--parallel", parallel, "run the n values concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int code = 0;
  try {
    if (n_opt->count() > 0) ctx.n = n_flag;
    ctx.load();
    if (decompose->parsed())
      code = cmd_decompose(ctx, fixture_id, row_index, l_label);
    else if (check->parsed())
      code = cmd_check(ctx, fixture_id);
    else if (metric->parsed())
      code = cmd_metric(ctx, fixture_id);
    else if (obstruct->parsed())
      code = cmd_obstruct(ctx, fixture_id, total_label, base_expr);
    else if (catalog->parsed() && catalog_list->parsed())
      code = cmd_catalog_list(ctx);
    else if (sweep->parsed())
      code = cmd_sweep(ctx, fixture_id, n_min_arg, n_max_arg, obstruct_only,
                       parallel);
  } catch (const sublab::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const sublab::ComputeError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }

  if (ctx.expect == "fail") {
    if (code == 1) return 0;
    if (code == 0) {
      std::cerr << "expected a negative verdict, got a positive one\n";
      return 1;
    }
  } else if (ctx.expect == "pass" && code == 1) {
    std::cerr << "expected a positive verdict, got a negative one\n";
  }
  return code;
}
