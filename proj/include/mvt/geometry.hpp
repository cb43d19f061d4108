#pragma once

// Exterior-algebra primitives in a single global chart of an m-dimensional
// manifold: vectors, one-forms, (momentum) bivectors, metrics and the
// induced fiber metric on bivectors.
//
// Index convention: all bivector sums run over the full, unrestricted index
// range, so that for a simple Euclidean bivector (w|w) = 4 * area^2.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <span>
#include <utility>
#include <vector>

#include "mvt/errors.hpp"

namespace mvt {

struct VectorTag {};
struct OneFormTag {};

/// Rank-1 array of components tagged with its variance.
template <class Tag>
class Components {
 public:
  Components() = default;
  explicit Components(std::size_t dim) : c_(dim, 0.0) {}
  Components(std::initializer_list<double> values) : c_(values) {}
  explicit Components(std::vector<double> values) : c_(std::move(values)) {}

  [[nodiscard]] std::size_t dim() const noexcept { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  [[nodiscard]] std::span<const double> values() const noexcept { return c_; }
  [[nodiscard]] std::span<double> values() noexcept { return c_; }

  friend bool operator==(const Components&, const Components&) = default;

  Components& operator+=(const Components& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Components& operator-=(const Components& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Components& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }
  friend Components operator+(Components a, const Components& b) { return a += b; }
  friend Components operator-(Components a, const Components& b) { return a -= b; }
  friend Components operator*(double s, Components a) { return a *= s; }
  friend Components operator-(Components a) { return a *= -1.0; }

 private:
  void check_same(const Components& o) const {
    if (o.dim() != dim()) throw DimensionError("component arrays differ in dimension");
  }
  std::vector<double> c_;
};

using Vector = Components<VectorTag>;
using OneForm = Components<OneFormTag>;

/// Euclidean norm of the component array (chart-dependent; used for residuals).
template <class Tag>
double euclidean_norm(const Components<Tag>& v);

/// Number of independent slots mu < nu of an antisymmetric rank-2 array.
constexpr std::size_t pair_count(std::size_t dim) noexcept { return dim * (dim - 1) / 2; }

/// Packed index of the pair (mu, nu), mu < nu, in row-major upper-triangle order.
constexpr std::size_t pair_index(std::size_t dim, std::size_t mu, std::size_t nu) noexcept {
  return mu * (2 * dim - mu - 1) / 2 + (nu - mu - 1);
}

/// Inverse of pair_index.
std::pair<std::size_t, std::size_t> pair_at(std::size_t dim, std::size_t k);

struct BivectorTag {};
struct MomentumTag {};

/// Antisymmetric rank-2 array stored by its mu < nu slots only. The full
/// accessor derives the lower triangle by a sign flip and returns an exact
/// zero on the diagonal, so antisymmetry cannot be broken.
template <class Tag>
class Antisymmetric2 {
 public:
  Antisymmetric2() = default;
  explicit Antisymmetric2(std::size_t dim) : dim_(dim), upper_(pair_count(dim), 0.0) {}

  /// Builds from a full dim x dim row-major array; only the upper triangle is
  /// read, the caller is responsible for it being antisymmetric.
  static Antisymmetric2 from_upper(std::size_t dim, std::span<const double> full) {
    Antisymmetric2 out(dim);
    for (std::size_t mu = 0; mu < dim; ++mu)
      for (std::size_t nu = mu + 1; nu < dim; ++nu) out.set(mu, nu, full[mu * dim + nu]);
    return out;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t slots() const noexcept { return upper_.size(); }

  double operator()(std::size_t mu, std::size_t nu) const {
    if (mu < nu) return upper_[pair_index(dim_, mu, nu)];
    if (mu > nu) return -upper_[pair_index(dim_, nu, mu)];
    return 0.0;
  }

  /// Sets the (mu, nu) entry; (nu, mu) follows. Diagonal writes must be zero.
  void set(std::size_t mu, std::size_t nu, double value) {
    if (mu < nu) {
      upper_[pair_index(dim_, mu, nu)] = value;
    } else if (mu > nu) {
      upper_[pair_index(dim_, nu, mu)] = -value;
    } else if (value != 0.0) {
      throw std::invalid_argument("diagonal of an antisymmetric array must vanish");
    }
  }

  double slot(std::size_t k) const { return upper_[k]; }
  double& slot(std::size_t k) { return upper_[k]; }
  [[nodiscard]] std::span<const double> independent() const noexcept { return upper_; }
  [[nodiscard]] std::span<double> independent() noexcept { return upper_; }

  friend bool operator==(const Antisymmetric2&, const Antisymmetric2&) = default;

  Antisymmetric2& operator+=(const Antisymmetric2& o) {
    check_same(o);
    for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] += o.upper_[k];
    return *this;
  }
  Antisymmetric2& operator-=(const Antisymmetric2& o) {
    check_same(o);
    for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] -= o.upper_[k];
    return *this;
  }
  Antisymmetric2& operator*=(double s) {
    for (double& v : upper_) v *= s;
    return *this;
  }
  friend Antisymmetric2 operator+(Antisymmetric2 a, const Antisymmetric2& b) { return a += b; }
  friend Antisymmetric2 operator-(Antisymmetric2 a, const Antisymmetric2& b) { return a -= b; }
  friend Antisymmetric2 operator*(double s, Antisymmetric2 a) { return a *= s; }
  friend Antisymmetric2 operator-(Antisymmetric2 a) { return a *= -1.0; }

 private:
  void check_same(const Antisymmetric2& o) const {
    if (o.dim_ != dim_) throw DimensionError("bivectors differ in dimension");
  }
  std::size_t dim_ = 0;
  std::vector<double> upper_;
};

/// Contravariant bivector, components xdot^{mu nu}.
using Bivector = Antisymmetric2<BivectorTag>;
/// Covariant bivector, components p_{mu nu}.
using MomentumBivector = Antisymmetric2<MomentumTag>;

template <class Tag>
double max_abs(const Antisymmetric2<Tag>& a);

enum class Signature { euclidean, lorentz };

/// Constant symmetric metric g_{mu nu} on the chart.
class Metric {
 public:
  /// Validates symmetry and |det g| > 1e-12, and infers the signature
  /// (all eigenvalues positive, or exactly one negative).
  Metric(std::size_t dim, std::vector<double> row_major);

  static Metric euclidean(std::size_t dim);
  /// diag(-1, 1, ..., 1).
  static Metric minkowski(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] Signature signature() const noexcept { return signature_; }
  double operator()(std::size_t mu, std::size_t nu) const { return g_[mu * dim_ + nu]; }
  [[nodiscard]] double determinant() const noexcept { return det_; }
  /// g^{mu nu}.
  [[nodiscard]] Metric inverse() const;

  static constexpr double kDegeneracyTolerance = 1e-12;

 private:
  std::size_t dim_;
  std::vector<double> g_;
  double det_ = 0.0;
  Signature signature_ = Signature::euclidean;
};

/// Rank-4 array h_{mu nu kappa lambda}, stored densely.
class FiberMetric {
 public:
  explicit FiberMetric(std::size_t dim) : dim_(dim), h_(dim * dim * dim * dim, 0.0) {}
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t m, std::size_t n, std::size_t k, std::size_t l) const {
    return h_[((m * dim_ + n) * dim_ + k) * dim_ + l];
  }
  double& operator()(std::size_t m, std::size_t n, std::size_t k, std::size_t l) {
    return h_[((m * dim_ + n) * dim_ + k) * dim_ + l];
  }

 private:
  std::size_t dim_;
  std::vector<double> h_;
};

/// (v wedge u)^{mu nu} = v^mu u^nu - v^nu u^mu.
Bivector wedge(const Vector& v, const Vector& u);

/// (i_eta u)^nu = sum_mu eta_mu u^{mu nu}.
Vector contract(const OneForm& eta, const Bivector& u);

/// h_{mu nu kappa lambda} = g_{mu kappa} g_{nu lambda} - g_{mu lambda} g_{nu kappa}.
FiberMetric induced_fiber_metric(const Metric& g);

/// Metric on covariant bivectors dual to induced_fiber_metric(g) under the
/// full-sum pairing: (1/4)(g^{mu kappa} g^{nu lambda} - g^{mu lambda} g^{nu kappa}).
/// The 1/4 makes it the exact inverse of h acting on antisymmetric arrays.
FiberMetric dual_fiber_metric(const Metric& g);

/// (u|w) = h_{mu nu kappa lambda} u^{mu nu} w^{kappa lambda}, full sum.
double scalar_product(const FiberMetric& h, const Bivector& u, const Bivector& w);
double scalar_product(const FiberMetric& h, const MomentumBivector& p, const MomentumBivector& q);

/// Index lowering through h: (h u)_{mu nu} = h_{mu nu kappa lambda} u^{kappa lambda}.
MomentumBivector lower(const FiberMetric& h, const Bivector& u);
/// Index raising through a dual fiber metric.
Bivector raise(const FiberMetric& dual, const MomentumBivector& p);

/// sum_{mu nu} p_{mu nu} u^{mu nu}, over all unrestricted indices.
double full_pairing(const MomentumBivector& p, const Bivector& u);

}  // namespace mvt
