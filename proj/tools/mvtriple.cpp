#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "mvt/app/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Dynamics on multivector bundles: phase checks, Euler-Lagrange residuals and Plateau solvers"};
  app.require_subcommand(1);

  mvt::app::CommandOptions opts;
  std::string spec, scenario, out;
  double tol = 0.0;
  std::size_t max_iter = 0;

  for (const std::string& name : mvt::app::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--spec", spec, "problem spec (JSON)");
    sub->add_option("--scenario", scenario, "builtin scenario name");
    sub->add_option("--out", out, "output path (grid table for plateau-solve, report otherwise)");
    sub->add_option("--tol", tol, "override the spec tolerance");
    sub->add_option("--max-iter", max_iter, "override the Newton iteration cap");
    sub->add_flag("--golden-regen", opts.golden_regen, "write the report to --out and exit 0");
  }
  app.add_subcommand("list-scenarios", "print the builtin scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mvt::app::kSpecError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen->get_name() == "list-scenarios") {
    std::cout << mvt::app::list_scenarios();
    return 0;
  }
  opts.command = chosen->get_name();
  if (chosen->count("--spec")) opts.spec_path = spec;
  if (chosen->count("--scenario")) opts.scenario = scenario;
  if (chosen->count("--out")) opts.out = out;
  if (chosen->count("--tol")) opts.tol = tol;
  if (chosen->count("--max-iter")) opts.max_iter = max_iter;

  const mvt::app::CommandResult r = mvt::app::run_command(opts);
  std::cout << r.report;
  if (!r.error.empty()) std::cerr << "error: " << r.error << '\n';
  return r.exit_code;
}
