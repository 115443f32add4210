// Command-line front end for the approximation-operator library.
//
// Subcommands regenerate the numerical tables (nu-table, xi-table, kn-table)
// and run the property suites (grunwald-suite, kantorovich-suite);
// reproduce-all runs everything and writes a JSON-lines manifest.
//
// Configuration precedence: built-in defaults, then an optional key=value
// config file (--config), then GRUNWALD_* environment variables, then flags.
//
// Exit status: 0 when every golden check of the command passed, 1 when at
// least one failed (the tables still get written), 2 on usage or computation
// errors.  Known deviations from the published reference figures are
// documented in README.md; with default settings some table rows fail their
// golden checks by design, so reproduce-all exits 1.
//
// This binary talks to the library exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grunwald/grunwald.h"

namespace {

struct ConfigDeleter {
  void operator()(gw_run_config* cfg) const { gw_run_config_free(cfg); }
};
using ConfigPtr = std::unique_ptr<gw_run_config, ConfigDeleter>;

struct TableDeleter {
  void operator()(gw_table_result* table) const { gw_table_result_free(table); }
};
using TablePtr = std::unique_ptr<gw_table_result, TableDeleter>;

[[noreturn]] void die(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(2);
}

void check(gw_status status, const char* what) {
  if (status != GW_OK) {
    die(std::string(what) + ": " + gw_last_error_message());
  }
}

/// Flags shared by every subcommand, applied on top of file + environment.
struct CommonFlags {
  std::string config_path;
  double grid_step = 0.0;
  double quad_tol = 0.0;
  int l_trunc = 0;
  std::string phase_mode;
  double forward_scale = 0.0;
  std::string out_dir;
  bool svg = false;
  int threads = 0;

  CLI::Option* grid_step_opt = nullptr;
  CLI::Option* quad_tol_opt = nullptr;
  CLI::Option* l_trunc_opt = nullptr;
  CLI::Option* phase_mode_opt = nullptr;
  CLI::Option* forward_scale_opt = nullptr;
  CLI::Option* out_dir_opt = nullptr;
  CLI::Option* svg_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--config", flags->config_path,
                  "key=value config file (lower precedence than env/flags)");
  flags->grid_step_opt = cmd->add_option(
      "--grid-step", flags->grid_step,
      "sup-search grid step relative to pi (default 1e-5)");
  flags->quad_tol_opt = cmd->add_option(
      "--quad-tol", flags->quad_tol, "quadrature tolerance (default 1e-10)");
  flags->l_trunc_opt = cmd->add_option(
      "--l-trunc", flags->l_trunc,
      "window half-range m; -1 derives it from the order/spectrum");
  flags->phase_mode_opt =
      cmd->add_option("--phase-mode", flags->phase_mode,
                      "window phase recombination: alternating|exact")
          ->check(CLI::IsMember({"alternating", "exact"}));
  flags->forward_scale_opt = cmd->add_option(
      "--forward-scale", flags->forward_scale,
      "forward-transform normalization constant (default 1)");
  flags->out_dir_opt = cmd->add_option("--out-dir", flags->out_dir,
                                       "output directory (default 'out')");
  flags->svg_opt =
      cmd->add_flag("--svg", flags->svg, "also write an SVG line plot");
  flags->threads_opt = cmd->add_option(
      "--threads", flags->threads, "worker threads; 0 = hardware count");
}

ConfigPtr build_config(const CommonFlags& flags) {
  gw_run_config* raw = nullptr;
  check(gw_run_config_create(&raw), "config");
  ConfigPtr cfg(raw);
  if (!flags.config_path.empty()) {
    check(gw_run_config_load_file(cfg.get(), flags.config_path.c_str()),
          "config file");
  }
  check(gw_run_config_apply_env(cfg.get()), "environment");
  auto set = [&](const char* key, const std::string& value) {
    check(gw_run_config_set(cfg.get(), key, value.c_str()), key);
  };
  // std::to_string renders doubles in fixed notation (1e-8 -> "0.000000"),
  // so small values must go through %g formatting.
  auto set_double = [&](const char* key, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    set(key, buf);
  };
  if (flags.grid_step_opt->count()) set_double("grid_step", flags.grid_step);
  if (flags.quad_tol_opt->count()) set_double("quad_tol", flags.quad_tol);
  if (flags.l_trunc_opt->count()) {
    set("l_trunc", std::to_string(flags.l_trunc));
  }
  if (flags.phase_mode_opt->count()) set("phase_mode", flags.phase_mode);
  if (flags.forward_scale_opt->count()) {
    set_double("forward_scale", flags.forward_scale);
  }
  if (flags.out_dir_opt->count()) set("out_dir", flags.out_dir);
  if (flags.svg_opt->count()) set("svg", flags.svg ? "1" : "0");
  if (flags.threads_opt->count()) set("threads", std::to_string(flags.threads));
  return cfg;
}

std::vector<int> default_orders(const char* which) {
  int count = 0;
  check(gw_default_orders(which, nullptr, 0, &count), "default orders");
  std::vector<int> orders(static_cast<std::size_t>(count));
  check(gw_default_orders(which, orders.data(), count, &count),
        "default orders");
  return orders;
}

std::vector<double> default_points(const char* which) {
  int count = 0;
  check(gw_default_points(which, nullptr, 0, &count), "default points");
  std::vector<double> points(static_cast<std::size_t>(count));
  check(gw_default_points(which, points.data(), count, &count),
        "default points");
  return points;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot open '" + path.string() + "' for writing");
  out << body;
  if (!out) die("failed writing '" + path.string() + "'");
}

/// Writes <name>.csv (and <name>.svg when configured), prints the golden
/// verdicts, and returns whether every gated check passed.
bool emit_table(gw_table_result* table, const gw_run_config* cfg) {
  int emit_svg = 0;
  check(gw_run_config_get(cfg, nullptr, nullptr, nullptr, nullptr, nullptr,
                          nullptr, &emit_svg, nullptr),
        "config query");
  const std::filesystem::path dir(gw_run_config_out_dir(cfg));
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) die("cannot create output directory '" + dir.string() + "'");

  const std::string name = gw_table_name(table);
  write_file(dir / (name + ".csv"), gw_table_csv(table));
  if (emit_svg) {
    const char* svg = gw_table_svg(table, /*log_y=*/1);
    if (!*svg) die(std::string("svg: ") + gw_last_error_message());
    write_file(dir / (name + ".svg"), svg);
  }

  const int golden_count = gw_table_golden_count(table);
  int failed = 0;
  for (int i = 0; i < golden_count; ++i) {
    if (!gw_table_golden_pass(table, i)) {
      ++failed;
      double value = 0.0, reference = 0.0, tolerance = 0.0;
      check(gw_table_golden_numbers(table, i, &value, &reference, &tolerance),
            "golden");
      std::printf("  FAIL %-44s value=%.12g reference=%.12g tol=%.3g (%s)\n",
                  gw_table_golden_label(table, i), value, reference, tolerance,
                  gw_table_golden_mode(table, i));
    }
  }
  std::printf("%s: %d rows, %d/%d checks passed, %.2fs -> %s.csv\n",
              name.c_str(), gw_table_rows(table), golden_count - failed,
              golden_count, gw_table_runtime_seconds(table), name.c_str());
  return gw_table_all_pass(table) != 0;
}

int finish(std::vector<TablePtr> tables, const gw_run_config* cfg,
           bool write_manifest) {
  bool all_pass = true;
  std::string manifest;
  for (auto& table : tables) {
    if (!emit_table(table.get(), cfg)) all_pass = false;
    manifest += gw_table_manifest_json(table.get());
    manifest += '\n';
  }
  if (write_manifest) {
    const std::filesystem::path dir(gw_run_config_out_dir(cfg));
    write_file(dir / "manifest.jsonl", manifest);
    std::printf("manifest: %zu tables -> manifest.jsonl\n", tables.size());
  } else {
    std::fputs(manifest.c_str(), stdout);
  }
  if (!all_pass) {
    std::printf(
        "golden check failures present (see README.md, 'Reference "
        "deviations'); exiting 1\n");
  }
  return all_pass ? 0 : 1;
}

TablePtr run_rate(int example, const std::vector<int>& orders,
                  const gw_run_config* cfg) {
  gw_table_result* raw = nullptr;
  check(gw_rate_table(example, orders.data(),
                      static_cast<int>(orders.size()), cfg, &raw),
        "nu-table");
  return TablePtr(raw);
}

TablePtr run_xi(const std::vector<int>& orders, const gw_run_config* cfg) {
  gw_table_result* raw = nullptr;
  check(gw_xi_table(orders.data(), static_cast<int>(orders.size()), cfg, &raw),
        "xi-table");
  return TablePtr(raw);
}

TablePtr run_kn(const std::vector<int>& orders,
                const std::vector<double>& points, const gw_run_config* cfg) {
  gw_table_result* raw = nullptr;
  check(gw_kn_table(orders.data(), static_cast<int>(orders.size()),
                    points.data(), static_cast<int>(points.size()), cfg, &raw),
        "kn-table");
  return TablePtr(raw);
}

TablePtr run_suite(gw_status (*suite)(const gw_run_config*, gw_table_result**),
                   const gw_run_config* cfg, const char* what) {
  gw_table_result* raw = nullptr;
  check(suite(cfg, &raw), what);
  return TablePtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      std::string("approximation-operator table and property-suite runner "
                  "(library ") +
      gw_version() +
      ").\nExit status: 0 all checks passed, 1 check failures, 2 errors."};
  app.require_subcommand(1);

  std::string example = "tent";
  std::vector<int> nu_orders, xi_orders, kn_orders;
  std::vector<double> kn_points;

  CLI::App* nu = app.add_subcommand(
      "nu-table", "cosine-metric rate table: n, nu_n, omega_f, omega_Ff");
  nu->add_option("--example", example,
                 "probe function: tent | cubic-spline-like")
      ->check(CLI::IsMember({"tent", "cubic-spline-like"}));
  nu->add_option("--orders", nu_orders, "orders n (comma separated)")
      ->delimiter(',');
  CommonFlags nu_flags;
  add_common_flags(nu, &nu_flags);

  CLI::App* xi = app.add_subcommand("xi-table",
                                    "angle-metric rate table: n, xi_n");
  xi->add_option("--orders", xi_orders, "orders n (comma separated)")
      ->delimiter(',');
  CommonFlags xi_flags;
  add_common_flags(xi, &xi_flags);

  CLI::App* kn = app.add_subcommand(
      "kn-table",
      "windowed inverse-transform values for the Gaussian: n, m, p, re, im");
  kn->add_option("--orders", kn_orders, "orders n (comma separated)")
      ->delimiter(',');
  kn->add_option("--points", kn_points, "evaluation points p (comma separated)")
      ->delimiter(',');
  CommonFlags kn_flags;
  add_common_flags(kn, &kn_flags);

  CLI::App* gsuite = app.add_subcommand(
      "grunwald-suite",
      "identity/negativity/norm/convergence property checks for the "
      "interpolation mean and its transform extensions");
  CommonFlags gsuite_flags;
  add_common_flags(gsuite, &gsuite_flags);

  CLI::App* ksuite = app.add_subcommand(
      "kantorovich-suite",
      "moment/witness/norm/rate property checks for the cell-averaging "
      "families");
  CommonFlags ksuite_flags;
  add_common_flags(ksuite, &ksuite_flags);

  CLI::App* all = app.add_subcommand(
      "reproduce-all",
      "every table plus both property suites; writes manifest.jsonl");
  CommonFlags all_flags;
  add_common_flags(all, &all_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize every usage error to exit 2; --help/--version stay 0.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<TablePtr> tables;
  if (nu->parsed()) {
    ConfigPtr cfg = build_config(nu_flags);
    if (nu_orders.empty()) nu_orders = default_orders("rate");
    tables.push_back(
        run_rate(example == "tent" ? 0 : 1, nu_orders, cfg.get()));
    return finish(std::move(tables), cfg.get(), /*write_manifest=*/false);
  }
  if (xi->parsed()) {
    ConfigPtr cfg = build_config(xi_flags);
    if (xi_orders.empty()) xi_orders = default_orders("xi");
    tables.push_back(run_xi(xi_orders, cfg.get()));
    return finish(std::move(tables), cfg.get(), /*write_manifest=*/false);
  }
  if (kn->parsed()) {
    ConfigPtr cfg = build_config(kn_flags);
    if (kn_orders.empty()) kn_orders = default_orders("kn");
    if (kn_points.empty()) kn_points = default_points("kn");
    tables.push_back(run_kn(kn_orders, kn_points, cfg.get()));
    return finish(std::move(tables), cfg.get(), /*write_manifest=*/false);
  }
  if (gsuite->parsed()) {
    ConfigPtr cfg = build_config(gsuite_flags);
    tables.push_back(run_suite(gw_grunwald_suite, cfg.get(), "grunwald-suite"));
    return finish(std::move(tables), cfg.get(), /*write_manifest=*/false);
  }
  if (ksuite->parsed()) {
    ConfigPtr cfg = build_config(ksuite_flags);
    tables.push_back(
        run_suite(gw_kantorovich_suite, cfg.get(), "kantorovich-suite"));
    return finish(std::move(tables), cfg.get(), /*write_manifest=*/false);
  }
  // reproduce-all: the four tables, then the two property suites; the
  // manifest is assembled in this fixed order by a single writer at the end.
  ConfigPtr cfg = build_config(all_flags);
  tables.push_back(run_rate(0, default_orders("rate"), cfg.get()));
  tables.push_back(run_rate(1, default_orders("rate"), cfg.get()));
  tables.push_back(run_xi(default_orders("xi"), cfg.get()));
  tables.push_back(run_kn(default_orders("kn"), default_points("kn"), cfg.get()));
  tables.push_back(run_suite(gw_grunwald_suite, cfg.get(), "grunwald-suite"));
  tables.push_back(
      run_suite(gw_kantorovich_suite, cfg.get(), "kantorovich-suite"));
  return finish(std::move(tables), cfg.get(), /*write_manifest=*/true);
}
