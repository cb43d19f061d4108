#include "mvt/variational.hpp"

#include <cmath>
#include <string>

namespace mvt {

namespace {

// First derivative along one grid direction at index k of n, second order.
template <class Sample>
double diff1(std::size_t k, std::size_t n, double h, Sample&& f) {
  if (k == 0) return (-3.0 * f(0) + 4.0 * f(1) - f(2)) / (2.0 * h);
  if (k + 1 == n) return (3.0 * f(n - 1) - 4.0 * f(n - 2) + f(n - 3)) / (2.0 * h);
  return (f(k + 1) - f(k - 1)) / (2.0 * h);
}

// First derivative at an interior index 1 <= k <= n - 2 that never reads the
// edge samples: central inside, second-order one-sided next to an edge.
// Edge samples carry one-sided tangents whose O(h^2) error would otherwise
// be divided by h.
template <class Sample>
double diff1_interior(std::size_t k, std::size_t n, double h, Sample&& f) {
  if (k == 1) return (-3.0 * f(1) + 4.0 * f(2) - f(3)) / (2.0 * h);
  if (k + 2 == n) return (3.0 * f(n - 2) - 4.0 * f(n - 3) + f(n - 4)) / (2.0 * h);
  return (f(k + 1) - f(k - 1)) / (2.0 * h);
}

std::string node_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

bool on_edge(std::size_t i, std::size_t j, std::size_t nt, std::size_t ns) {
  return i == 0 || j == 0 || i + 1 == nt || j + 1 == ns;
}

// Momentum field on the interior nodes; edge entries stay zero.
MomentumBivector zero_momentum(std::size_t dim) { return MomentumBivector(dim); }

NodeField<MomentumBivector> momentum_field(const LagrangianField& L, const SurfaceGrid& S, const BivectorField& w,
                                           Exec exec) {
  NodeField<MomentumBivector> p(S.nt(), S.ns(), zero_momentum(S.dim()));
  for_each_index(S.nt() * S.ns(), exec, [&](std::size_t k) {
    const std::size_t i = k / S.ns();
    const std::size_t j = k % S.ns();
    if (on_edge(i, j, S.nt(), S.ns())) return;
    try {
      p.flat(k) = L.momentum(S.at(i, j), w.flat(k));
    } catch (const DomainError& e) {
      throw DomainError("Lagrangian undefined at node " + node_text(i, j) + ": " + e.what());
    }
  });
  return p;
}

}  // namespace

SurfaceTangents surface_tangents(const SurfaceGrid& S, Exec exec) {
  const std::size_t n = S.dim();
  SurfaceTangents out{VectorField(S.nt(), S.ns(), Vector(n)), VectorField(S.nt(), S.ns(), Vector(n))};
  for_each_index(S.nt() * S.ns(), exec, [&](std::size_t k) {
    const std::size_t i = k / S.ns();
    const std::size_t j = k % S.ns();
    Vector& xt = out.dt.flat(k);
    Vector& xs = out.ds.flat(k);
    for (std::size_t sigma = 0; sigma < n; ++sigma) {
      xt[sigma] = diff1(i, S.nt(), S.dt(), [&](std::size_t a) { return S.coord(a, j, sigma); });
      xs[sigma] = diff1(j, S.ns(), S.ds(), [&](std::size_t b) { return S.coord(i, b, sigma); });
    }
  });
  return out;
}

BivectorField wedge_prolongation(const SurfaceGrid& S, Exec exec) {
  const SurfaceTangents tan = surface_tangents(S, exec);
  BivectorField w(S.nt(), S.ns(), Bivector(S.dim()));
  for_each_index(w.size(), exec, [&](std::size_t k) { w.flat(k) = wedge(tan.dt.flat(k), tan.ds.flat(k)); });
  return w;
}

CovectorField delta_L_surface(const LagrangianField& L, const SurfaceGrid& S, Exec exec) {
  if (L.dim() != S.dim()) throw DimensionError("Lagrangian and surface differ in dimension");
  const std::size_t n = S.dim();
  const SurfaceTangents tan = surface_tangents(S, exec);
  BivectorField w(S.nt(), S.ns(), Bivector(n));
  for_each_index(w.size(), exec, [&](std::size_t k) { w.flat(k) = wedge(tan.dt.flat(k), tan.ds.flat(k)); });
  const NodeField<MomentumBivector> p = momentum_field(L, S, w, exec);

  CovectorField out = CovectorField::interior(S.nt(), S.ns(), n);
  for_each_index(out.size(), exec, [&](std::size_t k) {
    const auto [i, j] = out.nodes[k];
    OneForm force;
    try {
      force = L.grad_x(S.at(i, j), w(i, j));
    } catch (const DomainError& e) {
      throw DomainError("Lagrangian undefined at node " + node_text(i, j) + ": " + e.what());
    }
    const Vector& xt = tan.dt(i, j);
    const Vector& xs = tan.ds(i, j);
    for (std::size_t nu = 0; nu < n; ++nu) {
      double flux = 0.0;
      for (std::size_t mu = 0; mu < n; ++mu) {
        const double dp_ds = diff1_interior(j, S.ns(), S.ds(), [&](std::size_t b) { return p(i, b)(mu, nu); });
        const double dp_dt = diff1_interior(i, S.nt(), S.dt(), [&](std::size_t a) { return p(a, j)(mu, nu); });
        flux += -xt[mu] * dp_ds + xs[mu] * dp_dt;
      }
      force[nu] += flux;
    }
    out.values[k] = std::move(force);
  });
  return out;
}

CovectorField delta_L_surface_composed(const LagrangianField& L, const SurfaceGrid& S) {
  const std::size_t n = S.dim();
  const SurfaceTangents tan = surface_tangents(S, Exec::serial);
  const BivectorField w = wedge_prolongation(S, Exec::serial);
  const NodeField<MomentumBivector> p = momentum_field(L, S, w, Exec::serial);

  CovectorField out = CovectorField::interior(S.nt(), S.ns(), n);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto [i, j] = out.nodes[k];
    const Vector& xt = tan.dt(i, j);
    const Vector& xs = tan.ds(i, j);
    MomentumBivector pt(n);
    MomentumBivector ps(n);
    for (std::size_t a = 0; a < pair_count(n); ++a) {
      pt.slot(a) = diff1_interior(i, S.nt(), S.dt(), [&](std::size_t r) { return p(r, j).slot(a); });
      ps.slot(a) = diff1_interior(j, S.ns(), S.ds(), [&](std::size_t r) { return p(i, r).slot(a); });
    }

    // T_t = xt^eta d_x^eta + pt_A d_{p_A}, T_s likewise; their wedge splits
    // into the xdot, mixed and p-p blocks.
    PhaseElement2 e = PhaseElement2::zero(n);
    e.x = S.at(i, j);
    e.p = p(i, j);
    e.xdot = w(i, j);
    for (std::size_t eta = 0; eta < n; ++eta)
      for (std::size_t a = 0; a < pair_count(n); ++a) e.y.slot(eta, a) = xt[eta] * ps.slot(a) - xs[eta] * pt.slot(a);
    for (std::size_t a = 0; a < pair_count(n); ++a)
      for (std::size_t b = a + 1; b < pair_count(n); ++b)
        e.pdot.set_between(a, b, pt.slot(a) * ps.slot(b) - ps.slot(a) * pt.slot(b));

    const CovectorOnConfigSpace lag = dL(L, e.x, e.xdot);
    const CovectorOnConfigSpace phase = alpha2(e);
    out.values[k] = lag.a - phase.a;
  }
  return out;
}

std::vector<Vector> curve_velocities(const CurveGrid& gamma) {
  const std::size_t n = gamma.size();
  std::vector<Vector> v(n, Vector(gamma.dim()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t sigma = 0; sigma < gamma.dim(); ++sigma)
      v[i][sigma] = diff1(i, n, gamma.dt(), [&](std::size_t a) { return gamma.coord(a, sigma); });
  return v;
}

CovectorField delta_L_curve(const CurveLagrangian& L, const CurveGrid& gamma, Exec exec) {
  if (L.dim() != gamma.dim()) throw DimensionError("Lagrangian and curve differ in dimension");
  const std::size_t n = gamma.size();
  const std::vector<Vector> v = curve_velocities(gamma);
  std::vector<OneForm> pv(n);
  for_each_index(n, exec, [&](std::size_t i) {
    if (i == 0 || i + 1 == n) {
      pv[i] = OneForm(gamma.dim());
      return;
    }
    try {
      pv[i] = L.grad_v(gamma.at(i), v[i]);
    } catch (const DomainError& e) {
      throw DomainError("Lagrangian undefined at node " + std::to_string(i) + ": " + e.what());
    }
  });
  CovectorField out = CovectorField::curve_interior(n, gamma.dim());
  for_each_index(out.size(), exec, [&](std::size_t k) {
    const std::size_t i = out.nodes[k].i;
    OneForm force = L.grad_x(gamma.at(i), v[i]);
    for (std::size_t sigma = 0; sigma < gamma.dim(); ++sigma)
      force[sigma] -= diff1_interior(i, n, gamma.dt(), [&](std::size_t a) { return pv[a][sigma]; });
    out.values[k] = std::move(force);
  });
  return out;
}

ElReport el_check(const CovectorField& residual, double tol) {
  ElReport r;
  if (residual.size() > 0) r.worst = residual.nodes.front();
  for (std::size_t k = 0; k < residual.size(); ++k) {
    const double nrm = euclidean_norm(residual.values[k]);
    if (std::isnan(nrm)) {
      r.max_norm = nrm;
      r.worst = residual.nodes[k];
      break;
    }
    if (nrm > r.max_norm) {
      r.max_norm = nrm;
      r.worst = residual.nodes[k];
    }
  }
  r.pass = r.max_norm <= tol;
  return r;
}

}  // namespace mvt
