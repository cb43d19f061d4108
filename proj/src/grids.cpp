#include "mvt/grids.hpp"

#include <cmath>
#include <string>

namespace mvt {

namespace {

void check_spacing(double h, const char* name) {
  if (!(std::isfinite(h) && h > 0.0))
    throw std::invalid_argument(std::string("degenerate grid spacing ") + name);
}

}  // namespace

SurfaceGrid::SurfaceGrid(std::size_t nt, std::size_t ns, double t0, double dt, double s0, double ds,
                         std::size_t dim)
    : nt_(nt), ns_(ns), dim_(dim), t0_(t0), dt_(dt), s0_(s0), ds_(ds), data_(nt * ns * dim, 0.0) {
  if (nt < 5 || ns < 5) throw std::invalid_argument("surface grid needs at least 5 samples per direction");
  if (dim < 2) throw DimensionError("surface grid needs dim >= 2");
  check_spacing(dt, "dt");
  check_spacing(ds, "ds");
}

SurfaceGrid SurfaceGrid::sample(std::size_t nt, std::size_t ns, double t0, double dt, double s0, double ds,
                                std::size_t dim, const std::function<Vector(double, double)>& fn) {
  SurfaceGrid g(nt, ns, t0, dt, s0, ds, dim);
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t j = 0; j < ns; ++j) g.set(i, j, fn(g.t(i), g.s(j)));
  return g;
}

Vector SurfaceGrid::at(std::size_t i, std::size_t j) const {
  const auto p = point(i, j);
  return Vector(std::vector<double>(p.begin(), p.end()));
}

void SurfaceGrid::set(std::size_t i, std::size_t j, const Vector& x) {
  if (x.dim() != dim_) throw DimensionError("surface sample has wrong dimension");
  for (std::size_t k = 0; k < dim_; ++k) coord(i, j, k) = x[k];
}

SurfaceGrid SurfaceGrid::transposed() const {
  SurfaceGrid out(ns_, nt_, s0_, ds_, t0_, dt_, dim_);
  for (std::size_t i = 0; i < nt_; ++i)
    for (std::size_t j = 0; j < ns_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) out.coord(j, i, k) = coord(i, j, k);
  return out;
}

void SurfaceGrid::check_finite() const {
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!std::isfinite(data_[k])) {
      const std::size_t node = k / dim_;
      throw FormatError("non-finite sample at node (" + std::to_string(node / ns_) + ", " +
                        std::to_string(node % ns_) + ")");
    }
}

CurveGrid::CurveGrid(std::size_t n, double t0, double dt, std::size_t dim)
    : n_(n), dim_(dim), t0_(t0), dt_(dt), data_(n * dim, 0.0) {
  if (n < 5) throw std::invalid_argument("curve grid needs at least 5 samples");
  if (dim < 1) throw DimensionError("curve grid needs dim >= 1");
  check_spacing(dt, "dt");
}

CurveGrid CurveGrid::sample(std::size_t n, double t0, double dt, std::size_t dim,
                            const std::function<Vector(double)>& fn) {
  CurveGrid g(n, t0, dt, dim);
  for (std::size_t i = 0; i < n; ++i) g.set(i, fn(g.t(i)));
  return g;
}

Vector CurveGrid::at(std::size_t i) const {
  return Vector(std::vector<double>(data_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                                    data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_)));
}

void CurveGrid::set(std::size_t i, const Vector& x) {
  if (x.dim() != dim_) throw DimensionError("curve sample has wrong dimension");
  for (std::size_t k = 0; k < dim_; ++k) data_[i * dim_ + k] = x[k];
}

CovectorField CovectorField::interior(std::size_t nt, std::size_t ns, std::size_t dim) {
  CovectorField f;
  f.nodes.reserve((nt - 2) * (ns - 2));
  for (std::size_t i = 1; i + 1 < nt; ++i)
    for (std::size_t j = 1; j + 1 < ns; ++j) f.nodes.push_back({i, j});
  f.values.assign(f.nodes.size(), OneForm(dim));
  return f;
}

CovectorField CovectorField::curve_interior(std::size_t n, std::size_t dim) {
  CovectorField f;
  for (std::size_t i = 1; i + 1 < n; ++i) f.nodes.push_back({i, 0});
  f.values.assign(f.nodes.size(), OneForm(dim));
  return f;
}

}  // namespace mvt
