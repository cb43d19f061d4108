#pragma once

// Uniformly sampled parameterized surfaces and curves, and per-node fields.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mvt/geometry.hpp"

namespace mvt {

struct NodeIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const NodeIndex&, const NodeIndex&) = default;
};

/// Samples x^sigma(t_i, s_j), i < nt, j < ns, on a uniform parameter grid.
/// Needs at least 5 samples in each direction.
class SurfaceGrid {
 public:
  SurfaceGrid(std::size_t nt, std::size_t ns, double t0, double dt, double s0, double ds, std::size_t dim);

  /// Samples fn(t, s) on the grid.
  static SurfaceGrid sample(std::size_t nt, std::size_t ns, double t0, double dt, double s0, double ds,
                            std::size_t dim, const std::function<Vector(double, double)>& fn);

  [[nodiscard]] std::size_t nt() const noexcept { return nt_; }
  [[nodiscard]] std::size_t ns() const noexcept { return ns_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] double dt() const noexcept { return dt_; }
  [[nodiscard]] double ds() const noexcept { return ds_; }
  [[nodiscard]] double t(std::size_t i) const noexcept { return t0_ + static_cast<double>(i) * dt_; }
  [[nodiscard]] double s(std::size_t j) const noexcept { return s0_ + static_cast<double>(j) * ds_; }
  [[nodiscard]] double t0() const noexcept { return t0_; }
  [[nodiscard]] double s0() const noexcept { return s0_; }

  [[nodiscard]] std::span<const double> point(std::size_t i, std::size_t j) const {
    return {data_.data() + (i * ns_ + j) * dim_, dim_};
  }
  [[nodiscard]] Vector at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Vector& x);
  double& coord(std::size_t i, std::size_t j, std::size_t sigma) { return data_[(i * ns_ + j) * dim_ + sigma]; }
  double coord(std::size_t i, std::size_t j, std::size_t sigma) const { return data_[(i * ns_ + j) * dim_ + sigma]; }

  /// Same samples with the roles of t and s exchanged.
  [[nodiscard]] SurfaceGrid transposed() const;

  /// Throws FormatError on non-finite samples.
  void check_finite() const;

 private:
  std::size_t nt_, ns_, dim_;
  double t0_, dt_, s0_, ds_;
  std::vector<double> data_;
};

/// Samples x^sigma(t_i), i < n, n >= 5.
class CurveGrid {
 public:
  CurveGrid(std::size_t n, double t0, double dt, std::size_t dim);
  static CurveGrid sample(std::size_t n, double t0, double dt, std::size_t dim,
                          const std::function<Vector(double)>& fn);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] double dt() const noexcept { return dt_; }
  [[nodiscard]] double t(std::size_t i) const noexcept { return t0_ + static_cast<double>(i) * dt_; }
  [[nodiscard]] Vector at(std::size_t i) const;
  void set(std::size_t i, const Vector& x);
  double coord(std::size_t i, std::size_t sigma) const { return data_[i * dim_ + sigma]; }

 private:
  std::size_t n_, dim_;
  double t0_, dt_;
  std::vector<double> data_;
};

/// One value per grid node, row-major in (i, j).
template <class T>
class NodeField {
 public:
  NodeField(std::size_t nt, std::size_t ns, const T& fill) : nt_(nt), ns_(ns), v_(nt * ns, fill) {}
  [[nodiscard]] std::size_t nt() const noexcept { return nt_; }
  [[nodiscard]] std::size_t ns() const noexcept { return ns_; }
  const T& operator()(std::size_t i, std::size_t j) const { return v_[i * ns_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return v_[i * ns_ + j]; }
  const T& flat(std::size_t k) const { return v_[k]; }
  T& flat(std::size_t k) { return v_[k]; }
  [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }

 private:
  std::size_t nt_, ns_;
  std::vector<T> v_;
};

using BivectorField = NodeField<Bivector>;
using VectorField = NodeField<Vector>;

/// Covector values on a list of nodes (the interior of a surface grid, or
/// the interior of a curve grid with j = 0).
struct CovectorField {
  std::vector<NodeIndex> nodes;
  std::vector<OneForm> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  /// Interior nodes (1..nt-2) x (1..ns-2) of an nt x ns grid, row-major.
  static CovectorField interior(std::size_t nt, std::size_t ns, std::size_t dim);
  /// Interior nodes 1..n-2 of a curve.
  static CovectorField curve_interior(std::size_t n, std::size_t dim);
};

}  // namespace mvt
