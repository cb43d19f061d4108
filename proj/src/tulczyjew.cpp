#include "mvt/tulczyjew.hpp"

#include <stdexcept>
#include <utility>

namespace mvt {

void PhaseElement1::validate() const {
  const std::size_t n = x.dim();
  if (p.dim() != n || xdot.dim() != n || pdot.dim() != n)
    throw DimensionError("phase element arrays differ in dimension");
}

CovectorOnTangent1 alpha1(const PhaseElement1& e) {
  e.validate();
  return {e.x, e.xdot, e.pdot, e.p};
}

PhaseElement1 alpha1_inverse(const CovectorOnTangent1& v) { return {v.x, v.c, v.xdot, v.a}; }

CovectorOnCotangent1 beta1(const PhaseElement1& e) {
  e.validate();
  return {e.x, e.p, -e.pdot, e.xdot};
}

CovectorOnTangent1 swap_cotangent(const CovectorOnCotangent1& v) {
  return {v.x, v.b, -v.a, v.p};
}

double MixedBlock::operator()(std::size_t eta, std::size_t theta, std::size_t rho) const {
  if (theta < rho) return slot(eta, pair_index(dim_, theta, rho));
  if (theta > rho) return -slot(eta, pair_index(dim_, rho, theta));
  return 0.0;
}

void MixedBlock::set(std::size_t eta, std::size_t theta, std::size_t rho, double value) {
  if (theta < rho) {
    slot(eta, pair_index(dim_, theta, rho)) = value;
  } else if (theta > rho) {
    slot(eta, pair_index(dim_, rho, theta)) = -value;
  } else if (value != 0.0) {
    throw std::invalid_argument("mixed block is antisymmetric in its lower indices");
  }
}

PairBlock::PairBlock(std::size_t dim)
    : dim_(dim), pairs_(pair_count(dim)), v_(pair_count(pair_count(dim)), 0.0) {}

double PairBlock::between(std::size_t a, std::size_t b) const {
  if (a < b) return v_[pair_index(pairs_, a, b)];
  if (a > b) return -v_[pair_index(pairs_, b, a)];
  return 0.0;
}

void PairBlock::set_between(std::size_t a, std::size_t b, double value) {
  if (a < b) {
    v_[pair_index(pairs_, a, b)] = value;
  } else if (a > b) {
    v_[pair_index(pairs_, b, a)] = -value;
  } else if (value != 0.0) {
    throw std::invalid_argument("p-p block is antisymmetric under pair exchange");
  }
}

double PairBlock::operator()(std::size_t g, std::size_t d, std::size_t e, std::size_t z) const {
  if (g == d || e == z) return 0.0;
  double sign = 1.0;
  if (g > d) {
    std::swap(g, d);
    sign = -sign;
  }
  if (e > z) {
    std::swap(e, z);
    sign = -sign;
  }
  return sign * between(pair_index(dim_, g, d), pair_index(dim_, e, z));
}

PhaseElement2 PhaseElement2::zero(std::size_t dim) {
  return {Vector(dim), MomentumBivector(dim), Bivector(dim), MixedBlock(dim), PairBlock(dim)};
}

void PhaseElement2::validate() const {
  const std::size_t n = x.dim();
  if (p.dim() != n || xdot.dim() != n || y.dim() != n || pdot.dim() != n)
    throw DimensionError("phase element blocks differ in dimension");
}

OneForm trace_y(const MixedBlock& y) {
  const std::size_t n = y.dim();
  OneForm out(n);
  for (std::size_t rho = 0; rho < n; ++rho) {
    double s = 0.0;
    for (std::size_t eta = 0; eta < n; ++eta) s += y(eta, eta, rho);
    out[rho] = s;
  }
  return out;
}

CovectorOnPhaseSpace beta2(const PhaseElement2& e) {
  e.validate();
  return {e.x, e.p, -trace_y(e.y), e.xdot};
}

CovectorOnConfigSpace alpha2(const PhaseElement2& e) {
  e.validate();
  return {e.x, e.xdot, trace_y(e.y), e.p};
}

CovectorOnConfigSpace swap_cotangent(const CovectorOnPhaseSpace& v) {
  return {v.x, v.b, -v.a, v.p};
}

}  // namespace mvt
