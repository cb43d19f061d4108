#include "mvt/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace mvt {

GraphGrid::GraphGrid(double x0, double x1, double y0, double y1, std::size_t nx, std::size_t ny)
    : x0_(x0), x1_(x1), y0_(y0), y1_(y1), nx_(nx), ny_(ny), z_(nx * ny, 0.0) {
  if (nx < 5 || ny < 5) throw std::invalid_argument("graph grid needs at least 5 nodes per direction");
  if (!(std::isfinite(x0) && std::isfinite(x1) && x1 > x0) || !(std::isfinite(y0) && std::isfinite(y1) && y1 > y0))
    throw std::invalid_argument("graph grid needs a non-degenerate finite rectangle");
}

GraphGrid GraphGrid::from_function(double x0, double x1, double y0, double y1, std::size_t nx, std::size_t ny,
                                   const std::function<double(double, double)>& f) {
  GraphGrid g(x0, x1, y0, y1, nx, ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) g.z(i, j) = f(g.x(i), g.y(j));
  return g;
}

SurfaceGrid GraphGrid::to_surface() const {
  SurfaceGrid s(nx_, ny_, x0_, hx(), y0_, hy(), 3);
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j) {
      s.coord(i, j, 0) = x(i);
      s.coord(i, j, 1) = y(j);
      s.coord(i, j, 2) = z(i, j);
    }
  return s;
}

std::pair<double, double> GraphGrid::boundary_range() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j)
      if (on_boundary(i, j)) {
        lo = std::min(lo, z(i, j));
        hi = std::max(hi, z(i, j));
      }
  return {lo, hi};
}

void GraphGrid::check_boundary_finite() const {
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j)
      if (on_boundary(i, j) && !std::isfinite(z(i, j))) {
        std::ostringstream msg;
        msg << "non-finite boundary value at node (" << i << ", " << j << ")";
        throw std::invalid_argument(msg.str());
      }
}

void SolveOptions::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (!(damping > 0.0 && damping <= 1.0)) throw std::invalid_argument("damping must lie in (0, 1]");
}

namespace {

struct Derivatives {
  double zx, zy, zxx, zyy, zxy;
};

Derivatives derivatives_at(const GraphGrid& g, std::size_t i, std::size_t j) {
  const double hx = g.hx();
  const double hy = g.hy();
  const double c = g.z(i, j);
  return {(g.z(i + 1, j) - g.z(i - 1, j)) / (2.0 * hx),
          (g.z(i, j + 1) - g.z(i, j - 1)) / (2.0 * hy),
          (g.z(i + 1, j) - 2.0 * c + g.z(i - 1, j)) / (hx * hx),
          (g.z(i, j + 1) - 2.0 * c + g.z(i, j - 1)) / (hy * hy),
          (g.z(i + 1, j + 1) - g.z(i + 1, j - 1) - g.z(i - 1, j + 1) + g.z(i - 1, j - 1)) / (4.0 * hx * hy)};
}

double quasilinear(const Derivatives& d) {
  return (1.0 + d.zx * d.zx) * d.zyy - 2.0 * d.zx * d.zy * d.zxy + (1.0 + d.zy * d.zy) * d.zxx;
}

double max_norm(const std::vector<double>& r) {
  double m = 0.0;
  for (double v : r) {
    if (std::isnan(v)) return v;
    m = std::max(m, std::abs(v));
  }
  return m;
}

}  // namespace

std::vector<double> minimal_surface_residual(const GraphGrid& g, Exec exec) {
  std::vector<double> r(g.interior_count());
  const std::size_t w = g.ny() - 2;
  for_each_index(r.size(), exec, [&](std::size_t k) { r[k] = quasilinear(derivatives_at(g, k / w + 1, k % w + 1)); });
  return r;
}

std::vector<double> minimal_surface_divergence(const GraphGrid& g, Exec exec) {
  std::vector<double> r(g.interior_count());
  const std::size_t w = g.ny() - 2;
  for_each_index(r.size(), exec, [&](std::size_t k) {
    const Derivatives d = derivatives_at(g, k / w + 1, k % w + 1);
    const double W = std::sqrt(1.0 + d.zx * d.zx + d.zy * d.zy);
    r[k] = quasilinear(d) / (W * W * W);
  });
  return r;
}

BandedLU minimal_surface_jacobian(const GraphGrid& g, Exec exec) {
  const std::size_t w = g.ny() - 2;
  BandedLU J(g.interior_count(), w + 1, w + 1);
  const double hx = g.hx();
  const double hy = g.hy();
  for_each_index(g.interior_count(), exec, [&](std::size_t row) {
    const std::size_t i = row / w + 1;
    const std::size_t j = row % w + 1;
    const Derivatives d = derivatives_at(g, i, j);
    const double q_zx = 2.0 * d.zx * d.zyy - 2.0 * d.zy * d.zxy;
    const double q_zy = 2.0 * d.zy * d.zxx - 2.0 * d.zx * d.zxy;
    const double q_zxx = 1.0 + d.zy * d.zy;
    const double q_zyy = 1.0 + d.zx * d.zx;
    const double q_zxy = -2.0 * d.zx * d.zy;
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b) {
        const std::size_t ni = static_cast<std::size_t>(static_cast<long long>(i) + a);
        const std::size_t nj = static_cast<std::size_t>(static_cast<long long>(j) + b);
        if (g.on_boundary(ni, nj)) continue;
        double v = 0.0;
        if (b == 0 && a != 0) v += q_zx * a / (2.0 * hx) + q_zxx / (hx * hx);
        if (a == 0 && b != 0) v += q_zy * b / (2.0 * hy) + q_zyy / (hy * hy);
        if (a == 0 && b == 0) v += -2.0 * q_zxx / (hx * hx) - 2.0 * q_zyy / (hy * hy);
        if (a != 0 && b != 0) v += q_zxy * (a * b) / (4.0 * hx * hy);
        J.at(row, g.interior_index(ni, nj)) = v;
      }
  });
  return J;
}

GraphGrid initial_guess(const GraphGrid& boundary) {
  boundary.check_boundary_finite();
  GraphGrid g = boundary;
  const std::size_t w = g.ny() - 2;
  const double cx = 1.0 / (g.hx() * g.hx());
  const double cy = 1.0 / (g.hy() * g.hy());
  BandedLU A(g.interior_count(), w, w);
  std::vector<double> rhs(g.interior_count(), 0.0);
  for (std::size_t i = 1; i + 1 < g.nx(); ++i)
    for (std::size_t j = 1; j + 1 < g.ny(); ++j) {
      const std::size_t row = g.interior_index(i, j);
      A.at(row, row) = -2.0 * cx - 2.0 * cy;
      const std::pair<std::size_t, std::size_t> nbr[4] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
      const double coef[4] = {cx, cx, cy, cy};
      for (int k = 0; k < 4; ++k) {
        const auto [ni, nj] = nbr[k];
        if (g.on_boundary(ni, nj)) {
          rhs[row] -= coef[k] * g.z(ni, nj);
        } else {
          A.at(row, g.interior_index(ni, nj)) = coef[k];
        }
      }
    }
  A.factor();
  A.solve(rhs);
  for (std::size_t i = 1; i + 1 < g.nx(); ++i)
    for (std::size_t j = 1; j + 1 < g.ny(); ++j) g.z(i, j) = rhs[g.interior_index(i, j)];
  return g;
}

PlateauResult solve_plateau(const GraphGrid& boundary, const SolveOptions& opts, Exec exec) {
  opts.validate();
  PlateauResult out{initial_guess(boundary), {}, false, {}};
  GraphGrid& z = out.surface;
  std::vector<double> f = minimal_surface_residual(z, exec);
  double r = max_norm(f);
  out.trace.push_back({0, r, 0.0});

  std::size_t it = 0;
  while (!(r <= opts.tol) && it < opts.max_iter) {
    ++it;
    BandedLU J = minimal_surface_jacobian(z, exec);
    try {
      J.factor();
    } catch (const SingularError& e) {
      out.message = std::string("singular Jacobian: ") + e.what();
      return out;
    }
    std::vector<double> step(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) step[k] = -f[k];
    J.solve(step);

    double alpha = opts.damping;
    bool accepted = false;
    while (alpha >= 1.0 / 1024.0) {
      GraphGrid trial = z;
      for (std::size_t i = 1; i + 1 < z.nx(); ++i)
        for (std::size_t j = 1; j + 1 < z.ny(); ++j) trial.z(i, j) += alpha * step[z.interior_index(i, j)];
      std::vector<double> ft = minimal_surface_residual(trial, exec);
      const double rt = max_norm(ft);
      if (rt < r) {
        z = std::move(trial);
        f = std::move(ft);
        r = rt;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      out.message = "line search stalled";
      return out;
    }
    out.trace.push_back({it, r, alpha});
  }
  out.converged = r <= opts.tol;
  if (!out.converged) out.message = "no convergence within max_iter";
  return out;
}

ConstrainedPlateauResult solve_constrained_plateau(const GraphGrid& boundary, const SolveOptions& opts, Exec exec) {
  opts.validate();
  boundary.check_boundary_finite();
  std::vector<std::pair<double, double>> uz;  // (x + y, z) per boundary node
  for (std::size_t i = 0; i < boundary.nx(); ++i)
    for (std::size_t j = 0; j < boundary.ny(); ++j)
      if (boundary.on_boundary(i, j)) uz.emplace_back(boundary.x(i) + boundary.y(j), boundary.z(i, j));

  Eigen::MatrixXd m(static_cast<Eigen::Index>(uz.size()), 2);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(uz.size()));
  for (std::size_t k = 0; k < uz.size(); ++k) {
    m(static_cast<Eigen::Index>(k), 0) = uz[k].first;
    m(static_cast<Eigen::Index>(k), 1) = 1.0;
    rhs[static_cast<Eigen::Index>(k)] = uz[k].second;
  }
  const auto qr = m.colPivHouseholderQr();
  if (qr.rank() < 2) throw SingularError("boundary samples do not determine a plane in x + y");
  const Eigen::Vector2d ab = qr.solve(rhs);

  ConstrainedPlateauResult out;
  out.a = ab[0];
  out.b = ab[1];
  for (const auto& [u, zv] : uz) out.fit_residual = std::max(out.fit_residual, std::abs(zv - out.a * u - out.b));
  out.feasible = out.fit_residual <= opts.tol;
  if (!out.feasible) return out;

  const GraphGrid plane = GraphGrid::from_function(boundary.x0(), boundary.x1(), boundary.y0(), boundary.y1(),
                                                   boundary.nx(), boundary.ny(),
                                                   [&](double x, double y) { return out.a * (x + y) + out.b; });
  out.diagnostics = nonholonomic_check(PlateauLagrangian(3), plane.to_surface(), AffineConstraint2::plateau_diagonal(),
                                       opts.tol, exec);
  return out;
}

}  // namespace mvt
