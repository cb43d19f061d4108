#include "mvt/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mvt {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::vector<double> slots_of(const Bivector& u) { return {u.independent().begin(), u.independent().end()}; }
std::vector<double> slots_of(const Vector& v) { return {v.values().begin(), v.values().end()}; }

template <class T>
void check_independent(std::size_t width, const std::vector<T>& basis) {
  if (basis.empty()) return;
  std::vector<std::vector<double>> rows;
  rows.reserve(basis.size());
  for (const T& u : basis) rows.push_back(slots_of(u));
  if (gram_rank(width, rows) != basis.size())
    throw std::invalid_argument("constraint linear part is not linearly independent");
}

}  // namespace

std::vector<std::vector<double>> null_space(std::size_t rows, std::size_t cols, std::span<const double> a) {
  if (a.size() != rows * cols) throw DimensionError("null_space: matrix data has wrong size");
  std::vector<std::vector<double>> out;
  if (cols == 0) return out;
  if (rows == 0) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<double> e(cols, 0.0);
      e[c] = 1.0;
      out.push_back(std::move(e));
    }
    return out;
  }
  const Eigen::Map<const RowMatrix> m(a.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma[0] : 0.0;
  const double cutoff =
      static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon() * sigma_max;

  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma[k] > 10.0 * cutoff) {
      ++rank;
    } else if (sigma[k] > cutoff) {
      std::ostringstream msg;
      msg.precision(3);
      msg << "rank decision ambiguous: singular value " << sigma[k] << " within 10x of cutoff " << cutoff;
      throw RankAmbiguityError(msg.str());
    }
  }
  const Eigen::MatrixXd& v = svd.matrixV();
  for (std::size_t c = rank; c < cols; ++c) {
    std::vector<double> col(cols);
    for (std::size_t r = 0; r < cols; ++r) col[r] = v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    out.push_back(std::move(col));
  }
  return out;
}

std::size_t gram_rank(std::size_t width, const std::vector<std::vector<double>>& rows) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd b(k, static_cast<Eigen::Index>(width));
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(width); ++c) b(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  const Eigen::MatrixXd gram = b * b.transpose();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma[0] == 0.0) return 0;
  // Gram squares the condition number, hence the square-root scale.
  const double cutoff = std::sqrt(std::numeric_limits<double>::epsilon()) * sigma[0];
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma[i] > cutoff) ++rank;
  return rank;
}

AffineConstraint2 AffineConstraint2::constant(Bivector section, std::vector<Bivector> basis) {
  const std::size_t n = section.dim();
  for (const Bivector& u : basis)
    if (u.dim() != n) throw DimensionError("constraint basis and section differ in dimension");
  check_independent(pair_count(n), basis);
  AffineConstraint2 a;
  a.dim = n;
  a.section = [section](const Vector&) { return section; };
  for (Bivector& u : basis) a.linear_part.push_back([u](const Vector&) { return u; });
  return a;
}

AffineConstraint2 AffineConstraint2::plateau_diagonal(double f) {
  Bivector generator(3);  // (dx - dy) ^ dz
  generator.set(0, 2, 1.0);
  generator.set(1, 2, -1.0);
  Bivector section(3);  // dx ^ dy + f (dx - dy) ^ dz
  section.set(0, 1, 1.0);
  section += f * generator;
  return constant(section, {generator});
}

AffineConstraint2 AffineConstraint2::unconstrained(std::size_t dim) {
  std::vector<Bivector> basis;
  for (std::size_t k = 0; k < pair_count(dim); ++k) {
    Bivector u(dim);
    u.slot(k) = 1.0;
    basis.push_back(u);
  }
  return constant(Bivector(dim), std::move(basis));
}

std::vector<Bivector> AffineConstraint2::basis_at(const Vector& x) const {
  std::vector<Bivector> basis;
  basis.reserve(linear_part.size());
  for (const auto& u : linear_part) basis.push_back(u(x));
  check_independent(pair_count(dim), basis);
  return basis;
}

AffineConstraint1 AffineConstraint1::constant(Vector section, std::vector<Vector> basis) {
  const std::size_t n = section.dim();
  for (const Vector& v : basis)
    if (v.dim() != n) throw DimensionError("constraint basis and section differ in dimension");
  check_independent(n, basis);
  AffineConstraint1 a;
  a.dim = n;
  a.section = [section](const Vector&) { return section; };
  for (Vector& v : basis) a.linear_part.push_back([v](const Vector&) { return v; });
  return a;
}

AffineConstraint1 AffineConstraint1::unconstrained(std::size_t dim) {
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < dim; ++k) {
    Vector e(dim);
    e[k] = 1.0;
    basis.push_back(e);
  }
  return constant(Vector(dim), std::move(basis));
}

std::vector<Vector> AffineConstraint1::basis_at(const Vector& x) const {
  std::vector<Vector> basis;
  basis.reserve(linear_part.size());
  for (const auto& v : linear_part) basis.push_back(v(x));
  check_independent(dim, basis);
  return basis;
}

std::vector<OneForm> annihilator_basis(std::size_t dim, std::span<const Bivector> linear_part) {
  // Stacked map eta -> (i_eta u_k)_k; row (k, nu), column mu holds u_k^{mu nu}.
  std::vector<double> a(linear_part.size() * dim * dim);
  for (std::size_t k = 0; k < linear_part.size(); ++k) {
    if (linear_part[k].dim() != dim) throw DimensionError("annihilator: generator has wrong dimension");
    for (std::size_t nu = 0; nu < dim; ++nu)
      for (std::size_t mu = 0; mu < dim; ++mu) a[(k * dim + nu) * dim + mu] = linear_part[k](mu, nu);
  }
  std::vector<OneForm> out;
  for (auto& col : null_space(linear_part.size() * dim, dim, a)) out.emplace_back(std::move(col));
  return out;
}

std::vector<OneForm> annihilator_basis(std::size_t dim, std::span<const Vector> linear_part) {
  std::vector<double> a(linear_part.size() * dim);
  for (std::size_t k = 0; k < linear_part.size(); ++k) {
    if (linear_part[k].dim() != dim) throw DimensionError("annihilator: generator has wrong dimension");
    for (std::size_t mu = 0; mu < dim; ++mu) a[k * dim + mu] = linear_part[k][mu];
  }
  std::vector<OneForm> out;
  for (auto& col : null_space(linear_part.size(), dim, a)) out.emplace_back(std::move(col));
  return out;
}

DalembertSplit dalembert_decompose(const OneForm& delta, std::span<const OneForm> orthonormal_basis) {
  DalembertSplit out;
  out.orthogonal = delta;
  out.lambda.reserve(orthonormal_basis.size());
  for (const OneForm& eta : orthonormal_basis) {
    if (eta.dim() != delta.dim()) throw DimensionError("d'Alembert split: dimension mismatch");
    double l = 0.0;
    for (std::size_t k = 0; k < delta.dim(); ++k) l += delta[k] * eta[k];
    out.lambda.push_back(l);
  }
  for (std::size_t i = 0; i < orthonormal_basis.size(); ++i)
    for (std::size_t k = 0; k < delta.dim(); ++k) out.orthogonal[k] -= out.lambda[i] * orthonormal_basis[i][k];
  out.orthogonal_norm = euclidean_norm(out.orthogonal);
  return out;
}

std::vector<double> multipliers_in_generators(std::span<const double> lambda, std::span<const OneForm> orthonormal_basis,
                                              std::span<const OneForm> generators) {
  if (lambda.size() != orthonormal_basis.size()) throw DimensionError("multiplier count differs from basis size");
  if (generators.empty()) return {};
  const std::size_t n = generators.front().dim();
  Eigen::VectorXd target = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) target[static_cast<Eigen::Index>(k)] += lambda[i] * orthonormal_basis[i][k];
  Eigen::MatrixXd g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(generators.size()));
  for (std::size_t c = 0; c < generators.size(); ++c)
    for (std::size_t k = 0; k < n; ++k) g(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c)) = generators[c][k];
  const Eigen::VectorXd mu = g.colPivHouseholderQr().solve(target);
  return {mu.data(), mu.data() + mu.size()};
}

namespace {

double constraint_norm_at(const Bivector& w, const Vector& x, const AffineConstraint2& A,
                          std::vector<OneForm>& annihilator) {
  const std::vector<Bivector> basis = A.basis_at(x);
  annihilator = annihilator_basis(A.dim, basis);
  const Bivector off = w - A.section(x);
  double s = 0.0;
  for (const OneForm& eta : annihilator) {
    const Vector c = contract(eta, off);
    for (double v : c.values()) s += v * v;
  }
  return std::sqrt(s);
}

void summarize(NonholonomicReport& r, double tol) {
  if (!r.nodes.empty()) r.worst_constraint = r.worst_orthogonal = r.nodes.front().node;
  for (const DalembertReport& d : r.nodes) {
    if (d.constraint_norm > r.max_constraint || std::isnan(d.constraint_norm)) {
      r.max_constraint = d.constraint_norm;
      r.worst_constraint = d.node;
    }
    if (d.orthogonal_norm > r.max_orthogonal || std::isnan(d.orthogonal_norm)) {
      r.max_orthogonal = d.orthogonal_norm;
      r.worst_orthogonal = d.node;
    }
    for (double l : d.lambda) r.max_abs_lambda = std::max(r.max_abs_lambda, std::abs(l));
  }
  r.constraint_pass = r.max_constraint <= tol;
  r.dalembert_pass = r.max_orthogonal <= tol;
}

}  // namespace

NodeField<double> constraint_residual_surface(const SurfaceGrid& S, const AffineConstraint2& A, Exec exec) {
  if (A.dim != S.dim()) throw DimensionError("constraint and surface differ in dimension");
  const BivectorField w = wedge_prolongation(S, exec);
  NodeField<double> out(S.nt(), S.ns(), 0.0);
  for_each_index(out.size(), exec, [&](std::size_t k) {
    std::vector<OneForm> annihilator;
    out.flat(k) = constraint_norm_at(w.flat(k), S.at(k / S.ns(), k % S.ns()), A, annihilator);
  });
  return out;
}

NonholonomicReport nonholonomic_check(const LagrangianField& L, const SurfaceGrid& S, const AffineConstraint2& A,
                                      double tol, Exec exec) {
  if (A.dim != S.dim()) throw DimensionError("constraint and surface differ in dimension");
  const CovectorField delta = delta_L_surface(L, S, exec);
  const BivectorField w = wedge_prolongation(S, exec);
  NonholonomicReport r;
  r.nodes.resize(delta.size());
  for_each_index(delta.size(), exec, [&](std::size_t k) {
    const auto [i, j] = delta.nodes[k];
    std::vector<OneForm> annihilator;
    DalembertReport& d = r.nodes[k];
    d.node = delta.nodes[k];
    d.constraint_norm = constraint_norm_at(w(i, j), S.at(i, j), A, annihilator);
    DalembertSplit split = dalembert_decompose(delta.values[k], annihilator);
    d.lambda = std::move(split.lambda);
    d.orthogonal_norm = split.orthogonal_norm;
  });
  summarize(r, tol);
  return r;
}

NonholonomicReport nonholonomic_check_curve(const CurveLagrangian& L, const CurveGrid& gamma,
                                            const AffineConstraint1& A, double tol, Exec exec) {
  if (A.dim != gamma.dim()) throw DimensionError("constraint and curve differ in dimension");
  const CovectorField delta = delta_L_curve(L, gamma, exec);
  const std::vector<Vector> v = curve_velocities(gamma);
  NonholonomicReport r;
  r.nodes.resize(delta.size());
  for_each_index(delta.size(), exec, [&](std::size_t k) {
    const std::size_t i = delta.nodes[k].i;
    const Vector x = gamma.at(i);
    const std::vector<Vector> basis = A.basis_at(x);
    const std::vector<OneForm> annihilator = annihilator_basis(A.dim, basis);
    const Vector off = v[i] - A.section(x);
    double s = 0.0;
    for (const OneForm& eta : annihilator) {
      double c = 0.0;
      for (std::size_t m = 0; m < A.dim; ++m) c += eta[m] * off[m];
      s += c * c;
    }
    DalembertReport& d = r.nodes[k];
    d.node = delta.nodes[k];
    d.constraint_norm = std::sqrt(s);
    DalembertSplit split = dalembert_decompose(delta.values[k], annihilator);
    d.lambda = std::move(split.lambda);
    d.orthogonal_norm = split.orthogonal_norm;
  });
  summarize(r, tol);
  return r;
}

}  // namespace mvt
