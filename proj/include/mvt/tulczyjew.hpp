#pragma once

// Coordinate form of the Tulczyjew maps. For n = 1 the middle space is
// T T*M with coordinates (x, p, xdot, pdot); for n = 2 it is the bivector
// bundle over the phase space, with coordinates (x, p, xdot, y, pdot) where
// y is the mixed x/p block and pdot the p/p block.

#include <cstddef>
#include <vector>

#include "mvt/geometry.hpp"

namespace mvt {

// ---- n = 1 ---------------------------------------------------------------

struct PhaseElement1 {
  Vector x;
  OneForm p;
  Vector xdot;
  OneForm pdot;

  /// Throws DimensionError unless all four arrays share one length.
  void validate() const;
};

/// Element of T*TM: base (x, xdot), fiber a over x and c over xdot.
struct CovectorOnTangent1 {
  Vector x;
  Vector xdot;
  OneForm a;
  OneForm c;
};

/// Element of T*T*M: base (x, p), fiber a over x and b over p.
struct CovectorOnCotangent1 {
  Vector x;
  OneForm p;
  OneForm a;
  Vector b;
};

/// (x, p, xdot, pdot) -> (x, xdot, pdot, p).
CovectorOnTangent1 alpha1(const PhaseElement1& e);
/// (x, xdot, a, c) -> (x, c, xdot, a); inverse permutation of alpha1.
PhaseElement1 alpha1_inverse(const CovectorOnTangent1& v);
/// (x, p, xdot, pdot) -> (x, p, -pdot, xdot). The sign makes dH-membership
/// read pdot = -dH/dx, xdot = dH/dp.
CovectorOnCotangent1 beta1(const PhaseElement1& e);
/// Canonical isomorphism T*T*M -> T*TM: (x, p, a, b) -> (x, b, -a, p).
CovectorOnTangent1 swap_cotangent(const CovectorOnCotangent1& v);

// ---- n = 2 ---------------------------------------------------------------

/// y^eta_{theta rho}: rank-3 array, antisymmetric in (theta, rho), stored by
/// its theta < rho slots.
class MixedBlock {
 public:
  MixedBlock() = default;
  explicit MixedBlock(std::size_t dim) : dim_(dim), v_(dim * pair_count(dim), 0.0) {}

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t eta, std::size_t theta, std::size_t rho) const;
  void set(std::size_t eta, std::size_t theta, std::size_t rho, double value);
  /// Slot (eta, k) where k is the packed pair index of theta < rho.
  double slot(std::size_t eta, std::size_t k) const { return v_[eta * pair_count(dim_) + k]; }
  double& slot(std::size_t eta, std::size_t k) { return v_[eta * pair_count(dim_) + k]; }
  [[nodiscard]] const std::vector<double>& raw() const noexcept { return v_; }
  std::vector<double>& raw() noexcept { return v_; }

  friend bool operator==(const MixedBlock&, const MixedBlock&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> v_;
};

/// pdot_{gamma delta epsilon zeta}: antisymmetric in each index pair and
/// under exchange of the two pairs; stored as the strict upper triangle of
/// an antisymmetric matrix over packed pairs.
class PairBlock {
 public:
  PairBlock() = default;
  explicit PairBlock(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t pairs() const noexcept { return pairs_; }
  double operator()(std::size_t g, std::size_t d, std::size_t e, std::size_t z) const;
  /// Entry between packed pairs A and B (any order).
  double between(std::size_t a, std::size_t b) const;
  void set_between(std::size_t a, std::size_t b, double value);
  [[nodiscard]] const std::vector<double>& raw() const noexcept { return v_; }
  std::vector<double>& raw() noexcept { return v_; }

  friend bool operator==(const PairBlock&, const PairBlock&) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t pairs_ = 0;
  std::vector<double> v_;
};

struct PhaseElement2 {
  Vector x;
  MomentumBivector p;
  Bivector xdot;
  MixedBlock y;
  PairBlock pdot;

  /// Zero element over an m-dimensional chart.
  static PhaseElement2 zero(std::size_t dim);
  void validate() const;
};

/// Element of T* of the phase space: base (x, p), fiber a over x and b over p.
struct CovectorOnPhaseSpace {
  Vector x;
  MomentumBivector p;
  OneForm a;
  Bivector b;
};

/// Element of T* of the bivector bundle: base (x, xdot), fiber a over x and
/// c over xdot.
struct CovectorOnConfigSpace {
  Vector x;
  Bivector xdot;
  OneForm a;
  MomentumBivector c;
};

/// ybar_rho = sum_eta y^eta_{eta rho}.
OneForm trace_y(const MixedBlock& y);

/// (x, p, xdot, y, pdot) -> (x, p, -ybar, xdot). The pdot block does not
/// enter.
CovectorOnPhaseSpace beta2(const PhaseElement2& e);
/// (x, p, xdot, y, pdot) -> (x, xdot, ybar, p).
CovectorOnConfigSpace alpha2(const PhaseElement2& e);
/// (x, p, a, b) -> (x, b, -a, p), so that alpha2 = swap_cotangent o beta2.
CovectorOnConfigSpace swap_cotangent(const CovectorOnPhaseSpace& v);

}  // namespace mvt
