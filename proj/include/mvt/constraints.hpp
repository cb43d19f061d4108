#pragma once

// Affine nonholonomic constraints A on the velocity bundle (n = 1) or the
// bivector bundle (n = 2): annihilators of the linear part v(A), the
// d'Alembert split of the external force, and the constrained
// Euler-Lagrange check.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mvt/dynamics.hpp"
#include "mvt/grids.hpp"
#include "mvt/parallel.hpp"
#include "mvt/variational.hpp"

namespace mvt {

/// Orthonormal basis of ker(A) for a dense row-major m x n matrix. The rank
/// is decided by an SVD with cutoff max(m, n) * eps * sigma_max; a singular
/// value in (cutoff, 10 * cutoff] throws RankAmbiguityError.
std::vector<std::vector<double>> null_space(std::size_t rows, std::size_t cols, std::span<const double> a);

/// Numerical rank of the Gram matrix of the given slot arrays.
std::size_t gram_rank(std::size_t width, const std::vector<std::vector<double>>& rows);

/// A = { a(x) + v : v in span u_k(x) } inside the bivector bundle.
struct AffineConstraint2 {
  using BivectorAt = std::function<Bivector(const Vector&)>;

  std::size_t dim = 0;
  BivectorAt section;
  std::vector<BivectorAt> linear_part;

  /// Constant section and basis; checks antisymmetric data and independence.
  static AffineConstraint2 constant(Bivector section, std::vector<Bivector> basis);
  /// dx^dy + f (dx - dy)^dz in R^3 with linear part span{(dx - dy)^dz}.
  static AffineConstraint2 plateau_diagonal(double f = 0.0);
  /// A = the whole bivector bundle.
  static AffineConstraint2 unconstrained(std::size_t dim);

  /// Linear-part basis at x; throws std::invalid_argument when dependent.
  [[nodiscard]] std::vector<Bivector> basis_at(const Vector& x) const;
};

/// A = { a(x) + v : v in span v_k(x) } inside TM.
struct AffineConstraint1 {
  using VectorAt = std::function<Vector(const Vector&)>;

  std::size_t dim = 0;
  VectorAt section;
  std::vector<VectorAt> linear_part;

  static AffineConstraint1 constant(Vector section, std::vector<Vector> basis);
  static AffineConstraint1 unconstrained(std::size_t dim);

  [[nodiscard]] std::vector<Vector> basis_at(const Vector& x) const;
};

/// Orthonormal basis of v(A)^0 = { eta : i_eta u = 0 for all u in v(A) }.
/// An empty linear part gives the coordinate basis of T*M.
std::vector<OneForm> annihilator_basis(std::size_t dim, std::span<const Bivector> linear_part);
/// n = 1 analogue: { eta : eta(v) = 0 for all v in v(A) }.
std::vector<OneForm> annihilator_basis(std::size_t dim, std::span<const Vector> linear_part);

/// Multipliers against an orthonormal annihilator basis and what is left.
struct DalembertSplit {
  std::vector<double> lambda;
  OneForm orthogonal;
  double orthogonal_norm = 0.0;
};

/// lambda_i = <delta, eta^i>; orthogonal = delta - sum lambda_i eta^i.
DalembertSplit dalembert_decompose(const OneForm& delta, std::span<const OneForm> orthonormal_basis);

/// Re-expresses sum lambda_i eta^i in user-supplied generators of v(A)^0
/// (least squares).
std::vector<double> multipliers_in_generators(std::span<const double> lambda, std::span<const OneForm> orthonormal_basis,
                                              std::span<const OneForm> generators);

/// Per-node norm of the contractions (xdot - a) with every annihilator
/// generator, over all grid nodes.
NodeField<double> constraint_residual_surface(const SurfaceGrid& S, const AffineConstraint2& A,
                                              Exec exec = Exec::parallel);

struct DalembertReport {
  NodeIndex node{};
  std::vector<double> lambda;
  double orthogonal_norm = 0.0;
  double constraint_norm = 0.0;
};

struct NonholonomicReport {
  std::vector<DalembertReport> nodes;
  double max_constraint = 0.0;
  double max_orthogonal = 0.0;
  NodeIndex worst_constraint{};
  NodeIndex worst_orthogonal{};
  double max_abs_lambda = 0.0;
  bool constraint_pass = true;
  bool dalembert_pass = true;
  [[nodiscard]] bool pass() const noexcept { return constraint_pass && dalembert_pass; }
};

/// Constraint membership (xdot in A) and d'Alembert membership
/// (dL in v(A)^0) at every interior node.
NonholonomicReport nonholonomic_check(const LagrangianField& L, const SurfaceGrid& S, const AffineConstraint2& A,
                                      double tol, Exec exec = Exec::parallel);

NonholonomicReport nonholonomic_check_curve(const CurveLagrangian& L, const CurveGrid& gamma,
                                            const AffineConstraint1& A, double tol, Exec exec = Exec::parallel);

}  // namespace mvt
