#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "doctest.h"
#include "json.hpp"
#include "report/run_config.hpp"
#include "report/table.hpp"
#include "report/tables.hpp"

using namespace grunwald;

TEST_SUITE_BEGIN("report");

TEST_CASE("report tables validate their shape") {
  ReportTable t;
  t.name = "demo";
  t.columns = {{"n", ""}, {"value", "s"}};
  t.add_row({1.0, 2.0});
  t.validate();
  t.add_row({1.0});  // wrong arity is caught at validation time
  CHECK_THROWS_AS(t.validate(), InvalidArgumentError);
  t.rows.pop_back();
  t.name.clear();
  CHECK_THROWS_AS(t.validate(), InvalidArgumentError);
}

TEST_CASE("CSV output is deterministic and carries units and labels") {
  ReportTable t;
  t.name = "demo";
  t.label_header = "phase_mode";
  t.columns = {{"n", ""}, {"runtime", "s"}};
  t.add_row("alternating", {4.0, 0.25});
  t.add_row("exact", {8.0, 1.0 / 3.0});
  const std::string csv = csv_string(t);
  CHECK(csv == csv_string(t));  // byte-identical on repeat
  CHECK(csv.find("phase_mode") == 0);
  CHECK(csv.find("runtime [s]") != std::string::npos);
  CHECK(csv.find("alternating") != std::string::npos);
  // 12 significant digits, '.' decimal separator.
  CHECK(csv.find("0.333333333333") != std::string::npos);
  CHECK(csv.find("\r") == std::string::npos);
}

TEST_CASE("SVG plots are self-contained polyline charts") {
  ReportTable t;
  t.name = "demo";
  t.columns = {{"n", ""}, {"err", ""}};
  for (int n : {2, 4, 8, 16}) t.add_row({double(n), 1.0 / n});
  SvgOptions options;
  options.log_y = true;
  const std::string svg = svg_string(t, options);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("golden checks implement the four comparison modes") {
  CHECK(make_check("a", 1.0, 1.0 + 4e-3, 0.005, "rel").pass);
  CHECK_FALSE(make_check("a", 1.0, 1.0 + 7e-3, 0.005, "rel").pass);
  CHECK(make_check("b", 0.1, 0.1005, 0.001, "abs").pass);
  CHECK_FALSE(make_check("b", 0.1, 0.102, 0.001, "abs").pass);
  CHECK(make_check("c", 4.9, 5.0, 0.0, "bound").pass);
  CHECK_FALSE(make_check("c", 5.1, 5.0, 0.0, "bound").pass);
  CHECK(make_check("d", 123.0, 0.0, 0.0, "info").pass);
  CHECK_THROWS_AS(make_check("e", 1.0, 1.0, 0.1, "exact"),
                  InvalidArgumentError);
}

TEST_CASE("info-mode goldens never fail the table verdict") {
  TableResult result;
  result.table.name = "demo";
  result.table.columns = {{"x", ""}};
  result.table.add_row({1.0});
  result.goldens.push_back(make_check("gate", 1.0, 1.0, 0.1, "rel"));
  result.goldens.push_back(make_check("note", 99.0, 0.0, 0.0, "info"));
  CHECK(result.all_pass());
  result.goldens.push_back(make_check("gate2", 9.0, 1.0, 0.1, "rel"));
  CHECK_FALSE(result.all_pass());
}

TEST_CASE("manifests are single-line JSON with the golden verdicts") {
  TableResult result;
  result.table.name = "demo";
  result.table.columns = {{"x", ""}};
  result.table.add_row({1.0});
  result.runtime_seconds = 0.5;
  result.goldens.push_back(make_check("gate", 1.0, 1.0, 0.1, "rel"));
  result.extra_json = "{\"note\":{\"key\":7}}";
  const std::string line = result.manifest_json();
  CHECK(line.find('\n') == std::string::npos);
  const nlohmann::json j = nlohmann::json::parse(line);
  CHECK(j.at("table") == "demo");
  CHECK(j.at("rows") == 1);
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("goldens").size() == 1);
  CHECK(j.at("goldens")[0].at("label") == "gate");
  CHECK(j.at("note").at("key") == 7);
}

TEST_CASE("run config: validation, file and environment layering") {
  RunConfig cfg;
  cfg.validate();  // defaults are legal
  apply_config_entry(&cfg, "grid_step", "0.001");
  apply_config_entry(&cfg, "phase_mode", "exact");
  apply_config_entry(&cfg, "svg", "true");
  CHECK(cfg.grid_step == doctest::Approx(1e-3));
  CHECK(cfg.phase_mode == PhaseMode::kExact);
  CHECK(cfg.emit_svg);
  // Parse errors throw eagerly; range errors are deferred to validate() so
  // later layers (env, flags) can override a bad file value.
  CHECK_THROWS_AS(apply_config_entry(&cfg, "no_such_key", "1"),
                  InvalidArgumentError);
  CHECK_THROWS_AS(apply_config_entry(&cfg, "quad_tol", "abc"),
                  InvalidArgumentError);
  {
    RunConfig bad = cfg;
    apply_config_entry(&bad, "grid_step", "-1");
    CHECK_THROWS_AS(bad.validate(), InvalidArgumentError);
  }

  const std::string path = "test_run_config.tmp";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "grid_step = 0.01\n";
    out << "threads=2\n\n";
  }
  RunConfig from_file;
  apply_config_file(&from_file, path);
  std::remove(path.c_str());
  CHECK(from_file.grid_step == doctest::Approx(0.01));
  CHECK(from_file.threads == 2);

  // Environment overrides sit on top of file values...
  setenv("GRUNWALD_GRID_STEP", "0.02", 1);
  apply_environment(&from_file);
  unsetenv("GRUNWALD_GRID_STEP");
  CHECK(from_file.grid_step == doctest::Approx(0.02));
  // ... and explicit entries (the flag layer) on top of everything.
  apply_config_entry(&from_file, "grid_step", "0.04");
  CHECK(from_file.grid_step == doctest::Approx(0.04));
}

TEST_CASE("phase mode names round-trip") {
  CHECK(parse_phase_mode(phase_mode_name(PhaseMode::kExact)) ==
        PhaseMode::kExact);
  CHECK(parse_phase_mode("alternating") == PhaseMode::kAlternating);
  CHECK_THROWS_AS(parse_phase_mode("sideways"), InvalidArgumentError);
}

TEST_CASE("xi table at coarse settings: shape, determinism, golden rows") {
  RunConfig cfg;
  cfg.grid_step = 1e-3;
  const std::vector<int> orders{100, 150};
  const TableResult first = xi_table(orders, cfg);
  const TableResult second = xi_table(orders, cfg);
  CHECK(csv_string(first.table) == csv_string(second.table));
  CHECK(first.table.rows.size() == 2);
  CHECK(first.table.columns.size() == 2);
  CHECK(first.table.rows[0][1] > first.table.rows[1][1]);  // decreasing
  REQUIRE(!first.goldens.empty());
  CHECK(first.goldens[0].label == "xi[n=100]");
  CHECK(first.runtime_seconds >= 0.0);
  CHECK_THROWS_AS(xi_table({}, cfg), InvalidArgumentError);
  RunConfig bad = cfg;
  bad.grid_step = -1.0;
  CHECK_THROWS_AS(xi_table(orders, bad), InvalidArgumentError);
}

TEST_SUITE_END();
