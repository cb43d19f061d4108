#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "mvt/app/commands.hpp"
#include "mvt/app/scenarios.hpp"
#include "mvt/grid_io.hpp"

using namespace mvt::app;

namespace {

CommandResult run_scenario(const std::string& command, const std::string& scenario) {
  CommandOptions o;
  o.command = command;
  o.scenario = scenario;
  return run_command(o);
}

CommandResult run_spec(const std::string& command, const std::string& file) {
  CommandOptions o;
  o.command = command;
  o.spec_path = std::string(MVT_TEST_DATA_DIR) + "/" + file;
  return run_command(o);
}

std::map<std::string, std::string> fields(const std::string& report) {
  std::map<std::string, std::string> out;
  std::istringstream in(report);
  for (std::string line; std::getline(in, line);) {
    const auto k = line.find(" = ");
    if (k != std::string::npos) out[line.substr(0, k)] = line.substr(k + 3);
  }
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mvt_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("builtin scenarios classify as expected") {
    const std::map<std::string, int> expected{
        {"scherk-65", 0},          {"plane", 0},
        {"catenoid-slice", 0},     {"constrained-plane", 0},
        {"constrained-quadratic", 2}, {"constrained-constant", 0},
        {"example7-plane", 0},     {"example7-quadratic", 2},
        {"example7-scherk", 2},    {"nambu-goto-euclid", 0},
        {"nambu-goto-lorentz", 0}, {"zero-element", 0},
        {"random-element", 0},     {"oscillator-cos", 0},
        {"free-line", 0},          {"free-parabola", 2},
        {"constrained-line", 0},   {"constrained-line-violating", 2}};
    REQUIRE(builtin_scenarios().size() == expected.size());
    for (const Scenario& s : builtin_scenarios()) {
      CAPTURE(s.name);
      const CommandResult r = run_scenario(s.command, s.name);
      REQUIRE(expected.count(s.name) == 1);
      CHECK(r.exit_code == expected.at(s.name));
      const auto f = fields(r.report);
      CHECK(f.at("command") == s.command);
      CHECK(f.at("scenario") == s.name);
      CHECK(f.at("exit_code") == std::to_string(r.exit_code));
      CHECK(f.at("status") == (r.exit_code == 0 ? "pass" : "fail"));
      CHECK(r.report == run_scenario(s.command, s.name).report);
    }
  }

  TEST_CASE("report contents") {
    const auto scherk = fields(run_scenario("plateau-solve", "scherk-65").report);
    CHECK(std::stod(scherk.at("final_residual")) <= 1e-8);
    CHECK(std::stod(scherk.at("reference.max_error")) < 1e-3);
    CHECK(scherk.count("newton.0") == 1);

    const auto plane = fields(run_scenario("plateau-solve", "plane").report);
    CHECK(std::stoi(plane.at("iterations")) <= 2);

    const auto quad = fields(run_scenario("nonholonomic-check", "example7-quadratic").report);
    CHECK(quad.at("constraint_pass") == "true");
    CHECK(quad.at("dalembert_pass") == "false");
    const auto sch = fields(run_scenario("nonholonomic-check", "example7-scherk").report);
    CHECK(sch.at("constraint_pass") == "false");
    CHECK(sch.at("dalembert_pass") == "true");

    const auto ng = fields(run_scenario("phase-check", "nambu-goto-euclid").report);
    CHECK(std::abs(std::stod(ng.at("morse.norm")) - 1.0) <= 1e-10);

    const auto viol = fields(run_scenario("classical-el", "constrained-line-violating").report);
    CHECK(viol.at("constrained.constraint_pass") == "false");
  }

  TEST_CASE("usage and spec errors exit with 1 and name the field") {
    CommandOptions none;
    none.command = "plateau-solve";
    CommandResult r = run_command(none);
    CHECK(r.exit_code == 1);
    CHECK(r.error.find("--spec") != std::string::npos);

    CHECK(run_scenario("plateau-solve", "no-such-scenario").error.find("--scenario") == 0);
    CHECK(run_scenario("classical-el", "scherk-65").exit_code == 1);
    CHECK(run_scenario("frobnicate", "scherk-65").error.find("command") == 0);

    r = run_spec("plateau-solve", "plateau_bad_shape.json");
    CHECK(r.exit_code == 1);
    CHECK(r.error.find("shape") == 0);
    CHECK(r.report.empty());

    r = run_spec("nonholonomic-check", "plateau_bad_shape.json");
    CHECK(r.exit_code == 1);
    CHECK(r.error.find("kind") == 0);

    r = run_spec("plateau-solve", "does_not_exist.json");
    CHECK(r.exit_code == 1);

    CommandOptions tol;
    tol.command = "plateau-solve";
    tol.scenario = "plane";
    tol.tol = -1.0;
    CHECK(run_command(tol).error.find("--tol") == 0);
    tol.tol.reset();
    tol.max_iter = 0;
    CHECK(run_command(tol).error.find("--max-iter") == 0);

    CommandOptions regen;
    regen.command = "plateau-solve";
    regen.scenario = "plane";
    regen.golden_regen = true;
    CHECK(run_command(regen).error.find("--golden-regen") == 0);
  }

  TEST_CASE("malformed inline specs") {
    const auto write = [](const std::string& name, const std::string& text) {
      const auto p = temp_path(name);
      std::ofstream(p) << text;
      return p.string();
    };
    const auto check = [&](const std::string& command, const std::string& text, const std::string& field) {
      CommandOptions o;
      o.command = command;
      o.spec_path = write("spec.json", text);
      const CommandResult r = run_command(o);
      CAPTURE(text);
      CHECK(r.exit_code == 1);
      CHECK(r.error.find(field) == 0);
    };
    check("plateau-solve", "{", "--spec");
    check("plateau-solve", R"({"kind": "soap"})", "kind");
    check("plateau-solve", R"({"kind": "plateau", "domain": [0, 1, 0], "shape": [9, 9], "boundary": {"name": "scherk"}})", "domain");
    check("plateau-solve", R"({"kind": "plateau", "domain": [0, 1, 0, 1], "shape": [9, 9], "boundary": {"name": "helicoid"}})", "boundary");
    check("plateau-solve", R"({"kind": "plateau", "domain": [0, 1, 0, 1], "shape": [9, 9], "boundary": {"name": "scherk"}, "tol": -1})", "tol");
    check("plateau-solve", R"({"kind": "plateau", "domain": [0, 1, 0, 1], "shape": [9, 9], "boundary": {"name": "scherk"}, "max_iter": 0})", "max_iter");
    check("nonholonomic-check", R"({"kind": "nonholonomic-check", "lagrangian": "plateau", "domain": [0, 1, 0, 1], "shape": [9, 9],
           "surface": {"name": "scherk"}, "constraint": {"dimension": 3, "section": [[1, 1, 2.0]]}})", "constraint");
    check("nonholonomic-check", R"({"kind": "nonholonomic-check", "lagrangian": "soap", "domain": [0, 1, 0, 1], "shape": [9, 9],
           "surface": {"name": "scherk"}, "constraint": {"builtin": "example7"}})", "lagrangian");
    check("phase-check", R"({"kind": "phase-check", "lagrangian": "nambu-goto", "metric": {"type": "euclidean", "dim": 3}})", "point");
    check("classical-el", R"({"kind": "classical-el", "lagrangian": "quadratic", "curve": {"name": "spiral", "n": 11}})", "curve");
    std::filesystem::remove(temp_path("spec.json"));
  }

  TEST_CASE("numeric breakdown is a failure, not a spec error") {
    // A Lorentzian Nambu-Goto Lagrangian on a spacelike graph leaves the
    // positive cone.
    CommandOptions o;
    o.command = "nonholonomic-check";
    o.spec_path = temp_path("lorentz.json").string();
    std::ofstream(*o.spec_path) << R"({"kind": "nonholonomic-check", "lagrangian": "nambu-goto",
        "metric": {"type": "minkowski", "dim": 3}, "domain": [0, 1, 0, 1], "shape": [9, 9],
        "surface": {"name": "diagonal-affine", "a": 0.1}, "constraint": {"builtin": "example7"}})";
    const CommandResult r = run_command(o);
    CHECK(r.exit_code == 2);
    CHECK(fields(r.report).count("error") == 1);
    std::filesystem::remove(*o.spec_path);
  }

  TEST_CASE("specs from files") {
    CommandResult r = run_spec("nonholonomic-check", "nonholonomic_plane.json");
    CHECK(r.exit_code == 0);
    CHECK(fields(r.report).at("spec") == "nonholonomic_plane.json");

    r = run_spec("plateau-solve", "plateau_from_table.json");
    CHECK(r.exit_code == 0);
    CHECK(fields(r.report).at("grid.shape") == "9 7");
  }

  TEST_CASE("overrides") {
    CommandOptions o;
    o.command = "plateau-solve";
    o.scenario = "scherk-65";
    o.max_iter = 1;
    CommandResult r = run_command(o);
    CHECK(r.exit_code == 2);
    CHECK(fields(r.report).at("converged") == "false");

    o.max_iter.reset();
    o.tol = 1e-4;
    r = run_command(o);
    CHECK(r.exit_code == 0);
    CHECK(fields(r.report).at("tol") == "0.0001");
  }

  TEST_CASE("output files") {
    const auto grid = temp_path("plane.grid");
    CommandOptions o;
    o.command = "plateau-solve";
    o.scenario = "plane";
    o.out = grid.string();
    const CommandResult r = run_command(o);
    REQUIRE(r.exit_code == 0);
    CHECK(fields(r.report).at("grid_file") == grid.string());
    std::ifstream in(grid);
    const mvt::SurfaceGrid S = mvt::read_surface_grid(in);
    CHECK(S.nt() == 33);
    CHECK(std::abs(S.coord(5, 7, 2) - (0.3 * S.coord(5, 7, 0) - 0.2 * S.coord(5, 7, 1) + 1.0)) <= 1e-10);

    // Regeneration writes the report and exits 0 even for failing scenarios.
    const auto golden = temp_path("golden.txt");
    CommandOptions g;
    g.command = "classical-el";
    g.scenario = "free-parabola";
    g.out = golden.string();
    g.golden_regen = true;
    const CommandResult gr = run_command(g);
    CHECK(gr.exit_code == 0);
    std::ifstream gin(golden);
    const std::string text((std::istreambuf_iterator<char>(gin)), std::istreambuf_iterator<char>());
    CHECK(text == gr.report);
    CHECK(fields(text).at("exit_code") == "2");

    std::filesystem::remove(grid);
    std::filesystem::remove(golden);
  }

  TEST_CASE("scenario listing") {
    const std::string list = list_scenarios();
    for (const Scenario& s : builtin_scenarios()) CHECK(list.find(s.name + "  " + s.command) != std::string::npos);
    CHECK(command_names().size() == 5);
  }
}
