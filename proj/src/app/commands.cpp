#include "mvt/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "mvt/app/problem_spec.hpp"
#include "mvt/app/report.hpp"
#include "mvt/app/scenarios.hpp"
#include "mvt/errors.hpp"
#include "mvt/grid_io.hpp"
#include "mvt/variational.hpp"

namespace mvt::app {

namespace {

using nlohmann::json;

struct Outcome {
  Report report;
  bool pass = false;
};

std::string node_text(const NodeIndex& n) { return "(" + std::to_string(n.i) + ", " + std::to_string(n.j) + ")"; }

std::vector<double> as_vector(std::span<const double> v) { return {v.begin(), v.end()}; }

std::string kind_for(const std::string& command) { return command == "plateau-solve" ? "plateau" : command; }

// ---- plateau --------------------------------------------------------------

Outcome plateau(const ProblemSpec& spec, const CommandOptions& cli) {
  const GraphGrid boundary = spec.graph("boundary");
  const SolveOptions opts = spec.solve_options();
  Outcome o;
  Report& r = o.report;
  r.add("grid.shape", std::to_string(boundary.nx()) + " " + std::to_string(boundary.ny()));
  r.add("grid.domain", std::vector<double>{boundary.x0(), boundary.x1(), boundary.y0(), boundary.y1()});
  r.add("tol", opts.tol);
  r.add("max_iter", opts.max_iter);

  const PlateauResult res = solve_plateau(boundary, opts);
  for (const NewtonStep& s : res.trace)
    r.add("newton." + std::to_string(s.iteration),
          "residual " + format_real(s.residual) + " damping " + format_real(s.damping));
  r.add("iterations", res.iterations());
  r.add("final_residual", res.final_residual());
  r.add("converged", res.converged);
  if (!res.message.empty()) r.add("message", res.message);

  if (spec.has("reference")) {
    const auto ref = spec.height("reference");
    double err = 0.0;
    for (std::size_t i = 0; i < boundary.nx(); ++i)
      for (std::size_t j = 0; j < boundary.ny(); ++j)
        err = std::max(err, std::abs(res.surface.z(i, j) - ref(boundary.x(i), boundary.y(j))));
    r.add("reference.max_error", err);
  }
  const ElReport el = el_check(delta_L_surface(PlateauLagrangian(3), res.surface.to_surface()), opts.tol);
  r.add("plateau_el.max_norm", el.max_norm);
  r.add("plateau_el.worst_node", node_text(el.worst));

  if (cli.out && !cli.golden_regen) {
    std::ofstream f(*cli.out);
    if (!f) throw SpecError("--out", "cannot write '" + *cli.out + "'");
    write_grid(f, res.surface.to_surface());
    r.add("grid_file", *cli.out);
  }
  o.pass = res.converged;
  return o;
}

// ---- constrained plateau ---------------------------------------------------

void add_nonholonomic(Report& r, const NonholonomicReport& rep, const std::string& prefix, bool curve = false) {
  const auto where = [curve](const NodeIndex& n) { return curve ? std::to_string(n.i) : node_text(n); };
  r.add(prefix + "nodes", rep.nodes.size());
  r.add(prefix + "max_constraint", rep.max_constraint);
  r.add(prefix + "worst_constraint_node", where(rep.worst_constraint));
  r.add(prefix + "max_orthogonal", rep.max_orthogonal);
  r.add(prefix + "worst_orthogonal_node", where(rep.worst_orthogonal));
  r.add(prefix + "max_abs_lambda", rep.max_abs_lambda);
  r.add(prefix + "constraint_pass", rep.constraint_pass);
  r.add(prefix + "dalembert_pass", rep.dalembert_pass);
}

Outcome constrained_plateau(const ProblemSpec& spec) {
  const GraphGrid boundary = spec.graph("boundary");
  const SolveOptions opts = spec.solve_options();
  Outcome o;
  Report& r = o.report;
  r.add("grid.shape", std::to_string(boundary.nx()) + " " + std::to_string(boundary.ny()));
  r.add("tol", opts.tol);
  const ConstrainedPlateauResult res = solve_constrained_plateau(boundary, opts);
  r.add("plane.a", res.a);
  r.add("plane.b", res.b);
  r.add("fit_residual", res.fit_residual);
  r.add("feasible", res.feasible);
  if (res.feasible) {
    add_nonholonomic(r, res.diagnostics, "diagnostics.");
  } else {
    r.add("message", "boundary data are not of the form a (x + y) + b");
  }
  o.pass = res.pass();
  return o;
}

// ---- nonholonomic check ----------------------------------------------------

Outcome nonholonomic(const ProblemSpec& spec) {
  const GraphGrid g = spec.graph("surface");
  const SurfaceGrid S = g.to_surface();
  const auto L = spec.surface_lagrangian(S.dim());
  const AffineConstraint2 A = spec.constraint();
  if (A.dim != S.dim()) throw SpecError("constraint", "dimension differs from the surface (3)");
  const double tol = spec.number("tol", 1e-6);
  const double scale = spec.number("tol_h2_scale", 0.0);
  if (!(tol > 0.0)) throw SpecError("tol", "must be positive");
  if (scale < 0.0) throw SpecError("tol_h2_scale", "must be non-negative");
  const double h = std::max(g.hx(), g.hy());
  const double tol_eff = std::max(tol, scale * h * h);

  Outcome o;
  Report& r = o.report;
  r.add("grid.shape", std::to_string(g.nx()) + " " + std::to_string(g.ny()));
  r.add("lagrangian", spec.text("lagrangian"));
  r.add("tol", tol);
  r.add("tol_effective", tol_eff);
  const NonholonomicReport rep = nonholonomic_check(*L, S, A, tol_eff);
  add_nonholonomic(r, rep, "");

  const NodeIndex centre{g.nx() / 2, g.ny() / 2};
  const Vector xc = S.at(centre.i, centre.j);
  const auto basis = A.basis_at(xc);
  const auto eta = annihilator_basis(S.dim(), basis);
  r.add("centre.node", node_text(centre));
  for (std::size_t k = 0; k < eta.size(); ++k) r.add("centre.annihilator." + std::to_string(k), as_vector(eta[k].values()));
  for (const auto& n : rep.nodes)
    if (n.node == centre) {
      r.add("centre.lambda", n.lambda);
      r.add("centre.orthogonal_norm", n.orthogonal_norm);
      r.add("centre.constraint_norm", n.constraint_norm);
    }
  o.pass = rep.pass();
  return o;
}

// ---- phase check -----------------------------------------------------------

double unit_random(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53 * 2.0 - 1.0; }

Vector vector_field(const json& point, const char* field, std::size_t dim) {
  Vector v(dim);
  if (!point.contains(field)) return v;
  const json& a = point[field];
  const std::string path = std::string("point.") + field;
  if (!a.is_array() || a.size() != dim) throw SpecError(path, "expected " + std::to_string(dim) + " numbers");
  for (std::size_t k = 0; k < dim; ++k) {
    if (!a[k].is_number()) throw SpecError(path, "entries must be numbers");
    v[k] = a[k].get<double>();
  }
  return v;
}

Bivector bivector_field(const json& point, const char* field, std::size_t dim) {
  if (!point.contains(field)) return Bivector(dim);
  try {
    return parse_bivector_components(point[field], dim, std::string("point.") + field);
  } catch (const FormatError& e) {
    throw SpecError(std::string("point.") + field, e.what());
  }
}

Outcome phase(const ProblemSpec& spec) {
  const Metric g = spec.metric();
  const std::size_t dim = g.dim();
  const auto L = spec.surface_lagrangian(dim);
  const std::string lname = spec.text("lagrangian");
  const double tol = spec.number("tol", 1e-10);
  if (!(tol > 0.0)) throw SpecError("tol", "must be positive");
  if (!spec.has("point") || !spec.raw()["point"].is_object()) throw SpecError("point", "required object is missing");
  const json& point = spec.raw()["point"];
  const std::string mode = point.value("mode", std::string("given"));
  const bool on_shell = spec.raw().value("require_on_shell", true);

  PhaseElement2 e = PhaseElement2::zero(dim);
  if (mode == "random") {
    if (!point.contains("seed") || !point["seed"].is_number_integer() || point["seed"].get<long long>() < 0)
      throw SpecError("point.seed", "required non-negative integer");
    std::mt19937_64 gen(point["seed"].get<std::uint64_t>());
    for (std::size_t k = 0; k < dim; ++k) e.x[k] = unit_random(gen);
    for (std::size_t k = 0; k < e.xdot.slots(); ++k) e.xdot.slot(k) = unit_random(gen);
    for (std::size_t k = 0; k < e.p.slots(); ++k) e.p.slot(k) = unit_random(gen);
    for (double& v : e.y.raw()) v = unit_random(gen);
    for (double& v : e.pdot.raw()) v = unit_random(gen);
  } else if (mode == "given" || mode == "dynamics") {
    e.x = vector_field(point, "x", dim);
    e.xdot = bivector_field(point, "xdot", dim);
    if (mode == "given") {
      const Bivector p = bivector_field(point, "p", dim);
      for (std::size_t k = 0; k < p.slots(); ++k) e.p.slot(k) = p.slot(k);
    } else {
      // On-shell completion: Legendre image for p, and y carrying dL/dx in
      // its trace.
      e.p = partial_L_bivector(*L, e.x, e.xdot);
      const OneForm force = L->grad_x(e.x, e.xdot);
      for (std::size_t rho = 0; rho < dim; ++rho) e.y.set(rho == 0 ? 1 : 0, rho == 0 ? 1 : 0, rho, force[rho]);
    }
  } else {
    throw SpecError("point.mode", "expected 'given', 'dynamics' or 'random'");
  }
  e.validate();

  Outcome o;
  Report& r = o.report;
  r.add("dim", dim);
  r.add("lagrangian", lname);
  r.add("point.mode", mode);
  r.add("point.x", as_vector(e.x.values()));
  r.add("point.xdot", as_vector(e.xdot.independent()));
  r.add("point.p", as_vector(e.p.independent()));
  r.add("tol", tol);

  const PhaseResidual2 lr = lagrangian_phase_residual(*L, e);
  r.add("lagrangian.r_force", as_vector(lr.r_force.values()));
  r.add("lagrangian.r_mom", as_vector(lr.r_mom.independent()));
  r.add("lagrangian.max_norm", lr.max_norm());

  // The same residual read off the triple: alpha2(e) against dL.
  const CovectorOnConfigSpace a2 = alpha2(e);
  const CovectorOnConfigSpace dl = dL(*L, e.x, e.xdot);
  double cross_a = 0.0;
  for (std::size_t k = 0; k < dim; ++k) cross_a = std::max(cross_a, std::abs((a2.a[k] - dl.a[k]) - lr.r_force[k]));
  for (std::size_t k = 0; k < e.p.slots(); ++k)
    cross_a = std::max(cross_a, std::abs((a2.c.slot(k) - dl.c.slot(k)) - lr.r_mom.slot(k)));
  r.add("alpha2_crosscheck", cross_a);
  bool pass = cross_a <= tol;
  if (on_shell) pass = pass && lr.max_norm() <= tol;

  std::unique_ptr<HamiltonianField> H;
  if (lname == "nambu-goto") {
    const MorseFamily morse(g);
    const double rho = L->value(e.x, e.xdot);
    H = morse.at(rho);
    r.add("hamiltonian", "morse");
    r.add("morse.r", rho);
    const double norm = morse.norm(e.p);
    r.add("morse.norm", norm);
    r.add("morse.defect", std::abs(norm - 1.0));
    if (on_shell) pass = pass && std::abs(norm - 1.0) <= tol;
  } else if (lname == "constant" && spec.number("lagrangian_value", 0.0) == 0.0) {
    H = std::make_unique<FunctionHamiltonian>(dim, [](const Vector&, const MomentumBivector&) { return 0.0; });
    r.add("hamiltonian", "zero");
  } else {
    r.add("hamiltonian", "none");
  }
  if (H) {
    const HamiltonianResidual2 hr = hamiltonian_phase_residual(*H, e);
    r.add("hamiltonian.r_force", as_vector(hr.r_force.values()));
    r.add("hamiltonian.r_vel", as_vector(hr.r_vel.independent()));
    r.add("hamiltonian.max_norm", hr.max_norm());
    const CovectorOnPhaseSpace b2 = beta2(e);
    const CovectorOnPhaseSpace dh = dH(*H, e.x, e.p);
    double cross_b = 0.0;
    for (std::size_t k = 0; k < dim; ++k) cross_b = std::max(cross_b, std::abs((dh.a[k] - b2.a[k]) - hr.r_force[k]));
    for (std::size_t k = 0; k < e.xdot.slots(); ++k)
      cross_b = std::max(cross_b, std::abs((b2.b.slot(k) - dh.b.slot(k)) - hr.r_vel.slot(k)));
    r.add("beta2_crosscheck", cross_b);
    pass = pass && cross_b <= tol;
    if (on_shell) pass = pass && hr.max_norm() <= tol;
  }
  r.add("require_on_shell", on_shell);
  o.pass = pass;
  return o;
}

// ---- classical ---------------------------------------------------------------

CurveGrid curve_of(const ProblemSpec& spec) {
  if (!spec.has("curve") || !spec.raw()["curve"].is_object()) throw SpecError("curve", "required object is missing");
  const json& c = spec.raw()["curve"];
  if (c.contains("file")) {
    if (!c["file"].is_string()) throw SpecError("curve.file", "expected a path");
    std::ifstream in(spec.resolve(c["file"].get<std::string>()));
    if (!in) throw SpecError("curve.file", "cannot open '" + c["file"].get<std::string>() + "'");
    try {
      return read_curve_grid(in);
    } catch (const FormatError& e) {
      throw SpecError("curve.file", e.what());
    }
  }
  const std::string name = c.value("name", std::string());
  if (!c.contains("n") || !c["n"].is_number_integer() || c["n"].get<long long>() < 5 || c["n"].get<long long>() > 10000000)
    throw SpecError("curve.n", "expected an integer >= 5");
  const auto n = static_cast<std::size_t>(c["n"].get<long long>());
  if (!c.contains("t0") || !c["t0"].is_number() || !c.contains("t1") || !c["t1"].is_number())
    throw SpecError("curve.t0", "t0 and t1 are required numbers");
  const double t0 = c["t0"].get<double>();
  const double t1 = c["t1"].get<double>();
  if (!(t1 > t0)) throw SpecError("curve.t1", "must exceed t0");
  const double dt = (t1 - t0) / static_cast<double>(n - 1);
  if (name == "cos") return CurveGrid::sample(n, t0, dt, 1, [](double t) { return Vector{std::cos(t)}; });
  if (name == "parabola") return CurveGrid::sample(n, t0, dt, 1, [](double t) { return Vector{t * t}; });
  if (name == "line") {
    if (!c.contains("x0") || !c["x0"].is_array() || c["x0"].empty()) throw SpecError("curve.x0", "expected a list");
    const std::size_t dim = c["x0"].size();
    const Vector x0 = vector_field(c, "x0", dim);
    const Vector v = vector_field(c, "v", dim);
    return CurveGrid::sample(n, t0, dt, dim, [&](double t) { return x0 + t * v; });
  }
  throw SpecError("curve.name", "expected 'cos', 'parabola' or 'line'");
}

Outcome classical(const ProblemSpec& spec) {
  const CurveGrid gamma = curve_of(spec);
  if (spec.text("lagrangian") != "quadratic") throw SpecError("lagrangian", "curves support 'quadratic' only");
  const double k = spec.number("stiffness", 0.0);
  const QuadraticLagrangian L(gamma.dim(), k);
  const double tol = spec.number("tol", 1e-10);
  if (!(tol > 0.0)) throw SpecError("tol", "must be positive");

  Outcome o;
  Report& r = o.report;
  r.add("points", gamma.size());
  r.add("dim", gamma.dim());
  r.add("stiffness", k);
  r.add("tol", tol);
  const ElReport el = el_check(delta_L_curve(L, gamma), tol);
  r.add("el.max_norm", el.max_norm);
  r.add("el.worst_node", el.worst.i);
  if (!spec.has("constraint")) {
    r.add("el.pass", el.pass);
    o.pass = el.pass;
    return o;
  }
  const json& c = spec.raw()["constraint"];
  const std::size_t dim = gamma.dim();
  if (!c.is_object()) throw SpecError("constraint", "expected an object");
  const Vector section = vector_field(c, "section", dim);
  std::vector<Vector> basis;
  if (c.contains("basis")) {
    if (!c["basis"].is_array()) throw SpecError("constraint.basis", "expected a list of vectors");
    for (const auto& b : c["basis"]) {
      if (!b.is_array() || b.size() != dim) throw SpecError("constraint.basis", "vectors need " + std::to_string(dim) + " entries");
      Vector v(dim);
      for (std::size_t q = 0; q < dim; ++q) v[q] = b[q].get<double>();
      basis.push_back(v);
    }
  }
  AffineConstraint1 A = [&] {
    try {
      return AffineConstraint1::constant(section, basis);
    } catch (const std::invalid_argument& e) {
      throw SpecError("constraint.basis", e.what());
    }
  }();
  const NonholonomicReport rep = nonholonomic_check_curve(L, gamma, A, tol);
  add_nonholonomic(r, rep, "constrained.", true);
  o.pass = rep.pass();
  return o;
}

Outcome dispatch(const std::string& kind, const ProblemSpec& spec, const CommandOptions& cli) {
  if (kind == "plateau") return plateau(spec, cli);
  if (kind == "constrained-plateau") return constrained_plateau(spec);
  if (kind == "nonholonomic-check") return nonholonomic(spec);
  if (kind == "phase-check") return phase(spec);
  return classical(spec);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"plateau-solve", "constrained-plateau", "nonholonomic-check",
                                              "phase-check", "classical-el"};
  return names;
}

std::string list_scenarios() {
  std::string out;
  for (const auto& s : builtin_scenarios()) out += s.name + "  " + s.command + "  " + s.summary + "\n";
  return out;
}

CommandResult run_command(const CommandOptions& cli) {
  CommandResult result;
  Report head;
  head.add("command", cli.command);
  try {
    if (std::find(command_names().begin(), command_names().end(), cli.command) == command_names().end())
      throw SpecError("command", "unknown command '" + cli.command + "'");
    if (cli.spec_path.has_value() == cli.scenario.has_value())
      throw SpecError("--spec/--scenario", "give exactly one of them");
    if (cli.golden_regen && !cli.out) throw SpecError("--golden-regen", "needs --out");

    std::optional<ProblemSpec> spec;
    if (cli.scenario) {
      const Scenario* s = find_scenario(*cli.scenario);
      if (!s) throw SpecError("--scenario", "unknown scenario '" + *cli.scenario + "'");
      if (s->command != cli.command)
        throw SpecError("--scenario", "'" + s->name + "' runs under '" + s->command + "'");
      spec.emplace(s->spec);
      head.add("scenario", s->name);
    } else {
      spec.emplace(ProblemSpec::load(*cli.spec_path));
      head.add("spec", std::filesystem::path(*cli.spec_path).filename().string());
    }
    if (spec->kind() != kind_for(cli.command))
      throw SpecError("kind", "'" + spec->kind() + "' does not match command '" + cli.command + "'");
    if (cli.tol) {
      if (!(*cli.tol > 0.0)) throw SpecError("--tol", "must be positive");
      spec->set("tol", *cli.tol);
    }
    if (cli.max_iter) {
      if (*cli.max_iter < 1) throw SpecError("--max-iter", "must be at least 1");
      spec->set("max_iter", *cli.max_iter);
    }

    Outcome o;
    try {
      o = dispatch(spec->kind(), *spec, cli);
    } catch (const SpecError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw SpecError("spec", e.what());
    } catch (const FormatError& e) {
      throw SpecError("spec", e.what());
    } catch (const std::exception& e) {
      // Numeric breakdown: domain violations, singular or rank-ambiguous
      // systems.
      o = Outcome{};
      o.report.add("error", e.what());
      o.pass = false;
    }
    result.exit_code = o.pass ? kPass : kNumericFailure;
    o.report.add("status", o.pass ? "pass" : "fail");
    o.report.add("exit_code", result.exit_code);
    result.report = head.str() + o.report.str();

    if (cli.golden_regen || (cli.out && cli.command != "plateau-solve")) {
      std::ofstream f(*cli.out, std::ios::binary);
      if (!f) throw SpecError("--out", "cannot write '" + *cli.out + "'");
      f << result.report;
    }
    if (cli.golden_regen) result.exit_code = kPass;
  } catch (const SpecError& e) {
    result = CommandResult{kSpecError, {}, e.what()};
  } catch (const std::exception& e) {
    result = CommandResult{kSpecError, {}, e.what()};
  }
  return result;
}

}  // namespace mvt::app
