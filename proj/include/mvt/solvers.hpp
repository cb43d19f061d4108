#pragma once

// Graph minimal surfaces z(x, y) over a rectangle with Dirichlet data:
// the unconstrained Plateau problem by damped Newton on the quasilinear form
//   (1 + z_x^2) z_yy - 2 z_x z_y z_xy + (1 + z_y^2) z_xx = 0,
// and the diagonal-constrained problem, whose solutions are the planes
// z = a (x + y) + b.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mvt/banded.hpp"
#include "mvt/constraints.hpp"
#include "mvt/grids.hpp"
#include "mvt/parallel.hpp"

namespace mvt {

/// Heights on an nx x ny node grid over [x0, x1] x [y0, y1]; the edge nodes
/// carry Dirichlet data.
class GraphGrid {
 public:
  GraphGrid(double x0, double x1, double y0, double y1, std::size_t nx, std::size_t ny);
  static GraphGrid from_function(double x0, double x1, double y0, double y1, std::size_t nx, std::size_t ny,
                                 const std::function<double(double, double)>& z);

  [[nodiscard]] std::size_t nx() const noexcept { return nx_; }
  [[nodiscard]] std::size_t ny() const noexcept { return ny_; }
  [[nodiscard]] double x0() const noexcept { return x0_; }
  [[nodiscard]] double x1() const noexcept { return x1_; }
  [[nodiscard]] double y0() const noexcept { return y0_; }
  [[nodiscard]] double y1() const noexcept { return y1_; }
  [[nodiscard]] double hx() const noexcept { return (x1_ - x0_) / static_cast<double>(nx_ - 1); }
  [[nodiscard]] double hy() const noexcept { return (y1_ - y0_) / static_cast<double>(ny_ - 1); }
  [[nodiscard]] double x(std::size_t i) const noexcept { return x0_ + static_cast<double>(i) * hx(); }
  [[nodiscard]] double y(std::size_t j) const noexcept { return y0_ + static_cast<double>(j) * hy(); }
  double& z(std::size_t i, std::size_t j) { return z_[i * ny_ + j]; }
  double z(std::size_t i, std::size_t j) const { return z_[i * ny_ + j]; }
  [[nodiscard]] bool on_boundary(std::size_t i, std::size_t j) const noexcept {
    return i == 0 || j == 0 || i + 1 == nx_ || j + 1 == ny_;
  }

  /// Unknown numbering of interior nodes: (i - 1) * (ny - 2) + (j - 1).
  [[nodiscard]] std::size_t interior_count() const noexcept { return (nx_ - 2) * (ny_ - 2); }
  [[nodiscard]] std::size_t interior_index(std::size_t i, std::size_t j) const noexcept {
    return (i - 1) * (ny_ - 2) + (j - 1);
  }

  /// The graph (x, y, z(x, y)) as a surface parameterized by (x, y).
  [[nodiscard]] SurfaceGrid to_surface() const;

  /// Boundary minimum and maximum.
  [[nodiscard]] std::pair<double, double> boundary_range() const;
  /// Throws std::invalid_argument on non-finite boundary entries.
  void check_boundary_finite() const;

 private:
  double x0_, x1_, y0_, y1_;
  std::size_t nx_, ny_;
  std::vector<double> z_;
};

struct SolveOptions {
  double tol = 1e-8;        // residual max-norm
  std::size_t max_iter = 50;
  double damping = 1.0;     // initial step factor in (0, 1]

  void validate() const;
};

/// Quasilinear minimal-surface operator at interior nodes, in unknown order.
std::vector<double> minimal_surface_residual(const GraphGrid& g, Exec exec = Exec::parallel);

/// Divergence form d/dx(z_x / W) + d/dy(z_y / W), evaluated as the
/// quasilinear operator over W^3 with the same central differences.
std::vector<double> minimal_surface_divergence(const GraphGrid& g, Exec exec = Exec::parallel);

/// Exact Jacobian of minimal_surface_residual with respect to the interior
/// heights, as a band matrix with kl = ku = ny - 1.
BandedLU minimal_surface_jacobian(const GraphGrid& g, Exec exec = Exec::parallel);

/// Harmonic fill: solves the 5-point Laplace equation for the interior with
/// the grid's boundary values.
GraphGrid initial_guess(const GraphGrid& boundary);

struct NewtonStep {
  std::size_t iteration = 0;
  double residual = 0.0;
  double damping = 0.0;
};

struct PlateauResult {
  GraphGrid surface;
  std::vector<NewtonStep> trace;  // entry 0 is the initial guess
  bool converged = false;
  std::string message;
  [[nodiscard]] std::size_t iterations() const noexcept { return trace.empty() ? 0 : trace.size() - 1; }
  [[nodiscard]] double final_residual() const noexcept { return trace.empty() ? 0.0 : trace.back().residual; }
};

/// Damped Newton from the harmonic fill of the boundary data. Steps are
/// halved until the residual max-norm decreases. Returns the best iterate
/// with converged = false if tol is not reached within max_iter.
PlateauResult solve_plateau(const GraphGrid& boundary, const SolveOptions& opts, Exec exec = Exec::parallel);

struct ConstrainedPlateauResult {
  double a = 0.0;
  double b = 0.0;
  double fit_residual = 0.0;  // max |z - a (x + y) - b| over boundary samples
  bool feasible = false;
  NonholonomicReport diagnostics;  // of the fitted plane, when feasible
  [[nodiscard]] bool pass() const noexcept { return feasible && diagnostics.pass(); }
};

/// Fits z = a (x + y) + b to the boundary samples and verifies the plane
/// against the diagonal constraint with the Plateau Lagrangian.
ConstrainedPlateauResult solve_constrained_plateau(const GraphGrid& boundary, const SolveOptions& opts,
                                                   Exec exec = Exec::parallel);

}  // namespace mvt
