#include "mvt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace mvt {

template <class Tag>
double euclidean_norm(const Components<Tag>& v) {
  double s = 0.0;
  for (double c : v.values()) s += c * c;
  return std::sqrt(s);
}
template double euclidean_norm(const Components<VectorTag>&);
template double euclidean_norm(const Components<OneFormTag>&);

template <class Tag>
double max_abs(const Antisymmetric2<Tag>& a) {
  double m = 0.0;
  for (double c : a.independent()) m = std::max(m, std::abs(c));
  return m;
}
template double max_abs(const Antisymmetric2<BivectorTag>&);
template double max_abs(const Antisymmetric2<MomentumTag>&);

std::pair<std::size_t, std::size_t> pair_at(std::size_t dim, std::size_t k) {
  for (std::size_t mu = 0; mu + 1 < dim; ++mu) {
    const std::size_t row = dim - mu - 1;
    if (k < row) return {mu, mu + 1 + k};
    k -= row;
  }
  throw std::out_of_range("pair slot out of range");
}

Metric::Metric(std::size_t dim, std::vector<double> row_major) : dim_(dim), g_(std::move(row_major)) {
  if (dim_ == 0 || g_.size() != dim_ * dim_)
    throw DimensionError("metric needs dim*dim entries");
  for (double v : g_)
    if (!std::isfinite(v)) throw std::invalid_argument("metric has non-finite entries");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (g_[i * dim_ + j] != g_[j * dim_ + i]) throw std::invalid_argument("metric is not symmetric");

  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      g_.data(), static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
  det_ = m.determinant();
  if (!(std::abs(det_) > kDegeneracyTolerance))
    throw SingularError("metric is degenerate: |det g| = " + std::to_string(std::abs(det_)));

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  int negative = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    if (eig.eigenvalues()[i] < 0.0) ++negative;
  if (negative == 0) {
    signature_ = Signature::euclidean;
  } else if (negative == 1) {
    signature_ = Signature::lorentz;
  } else {
    throw std::invalid_argument("metric signature is neither Riemannian nor Lorentzian");
  }
}

Metric Metric::euclidean(std::size_t dim) {
  std::vector<double> g(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) g[i * dim + i] = 1.0;
  return Metric(dim, std::move(g));
}

Metric Metric::minkowski(std::size_t dim) {
  std::vector<double> g(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) g[i * dim + i] = i == 0 ? -1.0 : 1.0;
  return Metric(dim, std::move(g));
}

Metric Metric::inverse() const {
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      g_.data(), static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
  const Eigen::MatrixXd inv = m.inverse();
  std::vector<double> out(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      // symmetrize away the roundoff of the inversion
      out[i * dim_ + j] = 0.5 * (inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +
                                 inv(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)));
  return Metric(dim_, std::move(out));
}

Bivector wedge(const Vector& v, const Vector& u) {
  if (v.dim() != u.dim()) throw DimensionError("wedge: vectors differ in dimension");
  const std::size_t n = v.dim();
  Bivector out(n);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu + 1; nu < n; ++nu) out.set(mu, nu, v[mu] * u[nu] - v[nu] * u[mu]);
  return out;
}

Vector contract(const OneForm& eta, const Bivector& u) {
  if (eta.dim() != u.dim()) throw DimensionError("contract: one-form and bivector differ in dimension");
  const std::size_t n = u.dim();
  Vector out(n);
  for (std::size_t nu = 0; nu < n; ++nu) {
    double s = 0.0;
    for (std::size_t mu = 0; mu < n; ++mu) s += eta[mu] * u(mu, nu);
    out[nu] = s;
  }
  return out;
}

namespace {

FiberMetric fiber_metric_from(const Metric& g, double scale) {
  const std::size_t n = g.dim();
  FiberMetric h(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          h(m, v, k, l) = scale * (g(m, k) * g(v, l) - g(m, l) * g(v, k));
  return h;
}

template <class A, class B>
double full_quadratic(const FiberMetric& h, const A& u, const B& w) {
  if (u.dim() != h.dim() || w.dim() != h.dim())
    throw DimensionError("scalar_product: fiber metric and bivectors differ in dimension");
  const std::size_t n = h.dim();
  double s = 0.0;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t v = 0; v < n; ++v) {
      const double umv = u(m, v);
      if (umv == 0.0) continue;
      double inner = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) inner += h(m, v, k, l) * w(k, l);
      s += umv * inner;
    }
  return s;
}

}  // namespace

FiberMetric induced_fiber_metric(const Metric& g) { return fiber_metric_from(g, 1.0); }

FiberMetric dual_fiber_metric(const Metric& g) { return fiber_metric_from(g.inverse(), 0.25); }

double scalar_product(const FiberMetric& h, const Bivector& u, const Bivector& w) {
  return full_quadratic(h, u, w);
}

double scalar_product(const FiberMetric& h, const MomentumBivector& p, const MomentumBivector& q) {
  return full_quadratic(h, p, q);
}

MomentumBivector lower(const FiberMetric& h, const Bivector& u) {
  if (u.dim() != h.dim()) throw DimensionError("lower: dimension mismatch");
  const std::size_t n = h.dim();
  MomentumBivector out(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t v = m + 1; v < n; ++v) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s += h(m, v, k, l) * u(k, l);
      out.set(m, v, s);
    }
  return out;
}

Bivector raise(const FiberMetric& dual, const MomentumBivector& p) {
  if (p.dim() != dual.dim()) throw DimensionError("raise: dimension mismatch");
  const std::size_t n = dual.dim();
  Bivector out(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t v = m + 1; v < n; ++v) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s += dual(m, v, k, l) * p(k, l);
      out.set(m, v, s);
    }
  return out;
}

double full_pairing(const MomentumBivector& p, const Bivector& u) {
  if (p.dim() != u.dim()) throw DimensionError("pairing: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < p.slots(); ++k) s += p.slot(k) * u.slot(k);
  return 2.0 * s;
}

}  // namespace mvt
