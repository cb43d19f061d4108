#include "mvt/app/scenarios.hpp"

namespace mvt::app {

namespace {

using nlohmann::json;

std::vector<Scenario> make() {
  std::vector<Scenario> s;
  const json square7 = {-0.7, 0.7, -0.7, 0.7};
  const json half = {-0.5, 0.5, -0.5, 0.5};

  s.push_back({"scherk-65", "plateau-solve", "Scherk patch log(cos y / cos x) on [-0.7, 0.7]^2, 65 x 65",
               {{"kind", "plateau"},
                {"domain", square7},
                {"shape", {65, 65}},
                {"boundary", {{"name", "scherk"}}},
                {"reference", {{"name", "scherk"}}},
                {"tol", 1e-8},
                {"max_iter", 50}}});
  s.push_back({"plane", "plateau-solve", "affine boundary data, recovered exactly",
               {{"kind", "plateau"},
                {"domain", {0.0, 1.0, 0.0, 1.0}},
                {"shape", {33, 33}},
                {"boundary", {{"name", "affine"}, {"a", 0.3}, {"b", -0.2}, {"c", 1.0}}},
                {"reference", {{"name", "affine"}, {"a", 0.3}, {"b", -0.2}, {"c", 1.0}}},
                {"tol", 1e-10},
                {"max_iter", 50}}});
  s.push_back({"catenoid-slice", "plateau-solve", "catenoid arccosh(r) over [1.2, 2.0] x [0.2, 1.0], 33 x 33",
               {{"kind", "plateau"},
                {"domain", {1.2, 2.0, 0.2, 1.0}},
                {"shape", {33, 33}},
                {"boundary", {{"name", "catenoid"}}},
                {"reference", {{"name", "catenoid"}}},
                {"tol", 1e-10},
                {"max_iter", 50}}});

  s.push_back({"constrained-plane", "constrained-plateau", "diagonal boundary z = 2(x + y) - 1",
               {{"kind", "constrained-plateau"},
                {"domain", {-1.0, 1.0, -1.0, 1.0}},
                {"shape", {33, 33}},
                {"boundary", {{"name", "diagonal-affine"}, {"a", 2.0}, {"b", -1.0}}},
                {"tol", 1e-8}}});
  s.push_back({"constrained-quadratic", "constrained-plateau", "boundary z = (x + y)^2, infeasible",
               {{"kind", "constrained-plateau"},
                {"domain", {-1.0, 1.0, -1.0, 1.0}},
                {"shape", {33, 33}},
                {"boundary", {{"name", "diagonal-quadratic"}}},
                {"tol", 1e-8}}});
  s.push_back({"constrained-constant", "constrained-plateau", "constant boundary z = 0.75",
               {{"kind", "constrained-plateau"},
                {"domain", {-1.0, 1.0, -1.0, 1.0}},
                {"shape", {33, 33}},
                {"boundary", {{"name", "constant"}, {"c", 0.75}}},
                {"tol", 1e-8}}});

  const auto example7 = [&](const char* name, const char* summary, const json& surface, const json& domain) {
    s.push_back({name, "nonholonomic-check", summary,
                 {{"kind", "nonholonomic-check"},
                  {"lagrangian", "plateau"},
                  {"domain", domain},
                  {"shape", {65, 65}},
                  {"surface", surface},
                  {"constraint", {{"builtin", "example7"}}},
                  {"tol", 1e-6},
                  {"tol_h2_scale", 10.0}}});
  };
  example7("example7-plane", "plane z = x + y + 1 under the diagonal constraint",
           {{"name", "diagonal-affine"}, {"a", 1.0}, {"b", 1.0}}, half);
  example7("example7-quadratic", "z = (x + y)^2: admissible, not a motion", {{"name", "diagonal-quadratic"}}, half);
  example7("example7-scherk", "Scherk patch: a minimal surface violating the constraint", {{"name", "scherk"}},
           square7);

  s.push_back({"nambu-goto-euclid", "phase-check", "Nambu-Goto phase point in Euclidean R^3",
               {{"kind", "phase-check"},
                {"metric", {{"type", "euclidean"}, {"dim", 3}}},
                {"lagrangian", "nambu-goto"},
                {"point", {{"mode", "dynamics"}, {"x", {0.1, 0.2, 0.3}}, {"xdot", {{1, 2, 1.0}, {1, 3, 0.5}, {2, 3, -0.25}}}}},
                {"tol", 1e-10}}});
  s.push_back({"nambu-goto-lorentz", "phase-check", "Nambu-Goto phase point on the positive cone of R^{1,2}",
               {{"kind", "phase-check"},
                {"metric", {{"type", "minkowski"}, {"dim", 3}}},
                {"lagrangian", "nambu-goto"},
                {"point", {{"mode", "dynamics"}, {"x", {0.0, 1.0, -1.0}}, {"xdot", {{2, 3, 1.0}, {1, 2, 0.3}, {1, 3, 0.2}}}}},
                {"tol", 1e-10}}});
  s.push_back({"zero-element", "phase-check", "zero phase element with L = 0",
               {{"kind", "phase-check"},
                {"metric", {{"type", "euclidean"}, {"dim", 3}}},
                {"lagrangian", "constant"},
                {"lagrangian_value", 0.0},
                {"point", {{"mode", "given"}}},
                {"tol", 1e-12}}});
  s.push_back({"random-element", "phase-check", "random off-shell element, alpha/beta cross-check",
               {{"kind", "phase-check"},
                {"metric", {{"type", "euclidean"}, {"dim", 3}}},
                {"lagrangian", "nambu-goto"},
                {"point", {{"mode", "random"}, {"seed", 20240229}}},
                {"require_on_shell", false},
                {"tol", 1e-12}}});

  const double two_pi = 6.283185307179586;
  s.push_back({"oscillator-cos", "classical-el", "harmonic oscillator along cos t, 1001 points over [0, 2 pi]",
               {{"kind", "classical-el"},
                {"lagrangian", "quadratic"},
                {"stiffness", 1.0},
                {"curve", {{"name", "cos"}, {"n", 1001}, {"t0", 0.0}, {"t1", two_pi}}},
                {"tol", 1e-3}}});
  s.push_back({"free-line", "classical-el", "free particle along a straight line in R^2",
               {{"kind", "classical-el"},
                {"lagrangian", "quadratic"},
                {"stiffness", 0.0},
                {"curve", {{"name", "line"}, {"x0", {1.0, -2.0}}, {"v", {0.5, 3.0}}, {"n", 21}, {"t0", 0.0}, {"t1", 2.0}}},
                {"tol", 1e-12}}});
  s.push_back({"free-parabola", "classical-el", "free particle along t^2: residual -2",
               {{"kind", "classical-el"},
                {"lagrangian", "quadratic"},
                {"stiffness", 0.0},
                {"curve", {{"name", "parabola"}, {"n", 21}, {"t0", 0.0}, {"t1", 2.0}}},
                {"tol", 1e-12}}});
  const json line_constraint = {{"section", {1.0, 0.0}}, {"basis", {{1.0, 0.0}}}};
  s.push_back({"constrained-line", "classical-el", "free particle, xdot^1 = 1, along (t, 0.5)",
               {{"kind", "classical-el"},
                {"lagrangian", "quadratic"},
                {"stiffness", 0.0},
                {"curve", {{"name", "line"}, {"x0", {0.0, 0.5}}, {"v", {1.0, 0.0}}, {"n", 21}, {"t0", 0.0}, {"t1", 2.0}}},
                {"constraint", line_constraint},
                {"tol", 1e-10}}});
  s.push_back({"constrained-line-violating", "classical-el", "free particle, xdot^1 = 1, along (t, t)",
               {{"kind", "classical-el"},
                {"lagrangian", "quadratic"},
                {"stiffness", 0.0},
                {"curve", {{"name", "line"}, {"x0", {0.0, 0.0}}, {"v", {1.0, 1.0}}, {"n", 21}, {"t0", 0.0}, {"t1", 2.0}}},
                {"constraint", line_constraint},
                {"tol", 1e-10}}});
  return s;
}

}  // namespace

const std::vector<Scenario>& builtin_scenarios() {
  static const std::vector<Scenario> all = make();
  return all;
}

const Scenario* find_scenario(const std::string& name) {
  for (const auto& s : builtin_scenarios())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace mvt::app
