#include "mvt/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mvt {

double fd_step(double v) noexcept {
  static const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  return base * std::max(1.0, std::abs(v));
}

OneForm LagrangianField::grad_x(const Vector& x, const Bivector& w) const {
  OneForm out(x.dim());
  Vector xp = x;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double h = fd_step(x[i]);
    xp[i] = x[i] + h;
    const double fp = value(xp, w);
    xp[i] = x[i] - h;
    const double fm = value(xp, w);
    xp[i] = x[i];
    out[i] = (fp - fm) / (2.0 * h);
  }
  return out;
}

MomentumBivector LagrangianField::momentum(const Vector& x, const Bivector& w) const {
  MomentumBivector out(w.dim());
  Bivector wp = w;
  for (std::size_t k = 0; k < w.slots(); ++k) {
    const double h = fd_step(w.slot(k));
    wp.slot(k) = w.slot(k) + h;
    const double fp = value(x, wp);
    wp.slot(k) = w.slot(k) - h;
    const double fm = value(x, wp);
    wp.slot(k) = w.slot(k);
    out.slot(k) = 0.5 * (fp - fm) / (2.0 * h);
  }
  return out;
}

OneForm HamiltonianField::grad_x(const Vector& x, const MomentumBivector& p) const {
  OneForm out(x.dim());
  Vector xp = x;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double h = fd_step(x[i]);
    xp[i] = x[i] + h;
    const double fp = value(xp, p);
    xp[i] = x[i] - h;
    const double fm = value(xp, p);
    xp[i] = x[i];
    out[i] = (fp - fm) / (2.0 * h);
  }
  return out;
}

Bivector HamiltonianField::velocity(const Vector& x, const MomentumBivector& p) const {
  Bivector out(p.dim());
  MomentumBivector pp = p;
  for (std::size_t k = 0; k < p.slots(); ++k) {
    const double h = fd_step(p.slot(k));
    pp.slot(k) = p.slot(k) + h;
    const double fp = value(x, pp);
    pp.slot(k) = p.slot(k) - h;
    const double fm = value(x, pp);
    pp.slot(k) = p.slot(k);
    out.slot(k) = 0.5 * (fp - fm) / (2.0 * h);
  }
  return out;
}

// ---- Nambu-Goto ------------------------------------------------------------

NambuGotoLagrangian::NambuGotoLagrangian(const Metric& g) : h_(induced_fiber_metric(g)) {}

double NambuGotoLagrangian::value(const Vector&, const Bivector& w) const {
  const double q = scalar_product(h_, w, w);
  if (!(q > 0.0))
    throw DomainError("Nambu-Goto Lagrangian needs a positive bivector, (w|w) = " + std::to_string(q));
  return std::sqrt(q);
}

OneForm NambuGotoLagrangian::grad_x(const Vector& x, const Bivector&) const { return OneForm(x.dim()); }

MomentumBivector NambuGotoLagrangian::momentum(const Vector& x, const Bivector& w) const {
  const double rho = value(x, w);
  MomentumBivector p = lower(h_, w);
  p *= 1.0 / rho;
  return p;
}

// ---- Plateau ---------------------------------------------------------------

PlateauLagrangian::PlateauLagrangian(std::size_t dim) : dim_(dim) {
  if (dim < 2) throw DimensionError("Plateau Lagrangian needs dim >= 2");
}

double PlateauLagrangian::value(const Vector&, const Bivector& w) const {
  double s = 0.0;
  for (double c : w.independent()) s += c * c;
  return std::sqrt(2.0 * s);
}

OneForm PlateauLagrangian::grad_x(const Vector& x, const Bivector&) const { return OneForm(x.dim()); }

MomentumBivector PlateauLagrangian::momentum(const Vector& x, const Bivector& w) const {
  const double l = value(x, w);
  if (l == 0.0) throw DomainError("Plateau momentum is undefined at the zero bivector");
  MomentumBivector p(w.dim());
  for (std::size_t k = 0; k < w.slots(); ++k) p.slot(k) = w.slot(k) / l;
  return p;
}

// ---- Morse family ----------------------------------------------------------

MorseFamily::MorseFamily(const Metric& g) : dual_(dual_fiber_metric(g)) {}

double MorseFamily::norm(const MomentumBivector& p) const {
  const double q = scalar_product(dual_, p, p);
  if (!(q > 0.0)) throw DomainError("Morse family needs (p|p) > 0, got " + std::to_string(q));
  return std::sqrt(q);
}

double MorseFamily::value(const MomentumBivector& p, double r) const { return r * (norm(p) - 1.0); }

double MorseFamily::d_dr(const MomentumBivector& p, double) const { return norm(p) - 1.0; }

Bivector MorseFamily::d_dp(const MomentumBivector& p, double r) const {
  Bivector v = raise(dual_, p);
  v *= r / norm(p);
  return v;
}

namespace {

class FrozenMorse final : public HamiltonianField {
 public:
  FrozenMorse(const MorseFamily& family, double r) : family_(family), r_(r) {}
  [[nodiscard]] std::size_t dim() const override { return family_.dim(); }
  double value(const Vector&, const MomentumBivector& p) const override { return family_.value(p, r_); }
  OneForm grad_x(const Vector& x, const MomentumBivector&) const override { return OneForm(x.dim()); }
  Bivector velocity(const Vector&, const MomentumBivector& p) const override { return family_.d_dp(p, r_); }

 private:
  MorseFamily family_;
  double r_;
};

}  // namespace

std::unique_ptr<HamiltonianField> MorseFamily::at(double r) const {
  return std::make_unique<FrozenMorse>(*this, r);
}

// ---- Legendre map and residuals --------------------------------------------

MomentumBivector partial_L_bivector(const LagrangianField& L, const Vector& x, const Bivector& w) {
  if (w.dim() != L.dim() || x.dim() != L.dim()) throw DimensionError("Lagrangian and point differ in dimension");
  return L.momentum(x, w);
}

CovectorOnConfigSpace dL(const LagrangianField& L, const Vector& x, const Bivector& w) {
  return {x, w, L.grad_x(x, w), partial_L_bivector(L, x, w)};
}

CovectorOnPhaseSpace dH(const HamiltonianField& H, const Vector& x, const MomentumBivector& p) {
  if (p.dim() != H.dim() || x.dim() != H.dim()) throw DimensionError("Hamiltonian and point differ in dimension");
  return {x, p, H.grad_x(x, p), H.velocity(x, p)};
}

double PhaseResidual2::max_norm() const { return std::max(euclidean_norm(r_force), max_abs(r_mom)); }

double HamiltonianResidual2::max_norm() const { return std::max(euclidean_norm(r_force), max_abs(r_vel)); }

PhaseResidual2 lagrangian_phase_residual(const LagrangianField& L, const PhaseElement2& e) {
  e.validate();
  return {trace_y(e.y) - L.grad_x(e.x, e.xdot), e.p - partial_L_bivector(L, e.x, e.xdot)};
}

HamiltonianResidual2 hamiltonian_phase_residual(const HamiltonianField& H, const PhaseElement2& e) {
  e.validate();
  const CovectorOnPhaseSpace d = dH(H, e.x, e.p);
  return {trace_y(e.y) + d.a, e.xdot - d.b};
}

double euler_pairing(const MomentumBivector& p, const Bivector& w) { return full_pairing(p, w); }

// ---- n = 1 -----------------------------------------------------------------

OneForm CurveLagrangian::grad_x(const Vector& x, const Vector& v) const {
  OneForm out(x.dim());
  Vector xp = x;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double h = fd_step(x[i]);
    xp[i] = x[i] + h;
    const double fp = value(xp, v);
    xp[i] = x[i] - h;
    const double fm = value(xp, v);
    xp[i] = x[i];
    out[i] = (fp - fm) / (2.0 * h);
  }
  return out;
}

OneForm CurveLagrangian::grad_v(const Vector& x, const Vector& v) const {
  OneForm out(v.dim());
  Vector vp = v;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double h = fd_step(v[i]);
    vp[i] = v[i] + h;
    const double fp = value(x, vp);
    vp[i] = v[i] - h;
    const double fm = value(x, vp);
    vp[i] = v[i];
    out[i] = (fp - fm) / (2.0 * h);
  }
  return out;
}

double QuadraticLagrangian::value(const Vector& x, const Vector& v) const {
  double kin = 0.0;
  double pot = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    kin += v[i] * v[i];
    pot += x[i] * x[i];
  }
  return 0.5 * kin - 0.5 * k_ * pot;
}

OneForm QuadraticLagrangian::grad_x(const Vector& x, const Vector&) const {
  OneForm out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = -k_ * x[i];
  return out;
}

OneForm QuadraticLagrangian::grad_v(const Vector&, const Vector& v) const {
  OneForm out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = v[i];
  return out;
}

OneForm CurveHamiltonian::grad_x(const Vector& x, const OneForm& p) const {
  OneForm out(x.dim());
  Vector xp = x;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double h = fd_step(x[i]);
    xp[i] = x[i] + h;
    const double fp = value(xp, p);
    xp[i] = x[i] - h;
    const double fm = value(xp, p);
    xp[i] = x[i];
    out[i] = (fp - fm) / (2.0 * h);
  }
  return out;
}

Vector CurveHamiltonian::grad_p(const Vector& x, const OneForm& p) const {
  Vector out(p.dim());
  OneForm pp = p;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double h = fd_step(p[i]);
    pp[i] = p[i] + h;
    const double fp = value(x, pp);
    pp[i] = p[i] - h;
    const double fm = value(x, pp);
    pp[i] = p[i];
    out[i] = (fp - fm) / (2.0 * h);
  }
  return out;
}

double QuadraticHamiltonian::value(const Vector& x, const OneForm& p) const {
  double kin = 0.0;
  double pot = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    kin += p[i] * p[i];
    pot += x[i] * x[i];
  }
  return 0.5 * kin + 0.5 * k_ * pot;
}

OneForm QuadraticHamiltonian::grad_x(const Vector& x, const OneForm&) const {
  OneForm out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = k_ * x[i];
  return out;
}

Vector QuadraticHamiltonian::grad_p(const Vector&, const OneForm& p) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = p[i];
  return out;
}

CovectorOnTangent1 dL(const CurveLagrangian& L, const Vector& x, const Vector& v) {
  return {x, v, L.grad_x(x, v), L.grad_v(x, v)};
}

CovectorOnCotangent1 dH(const CurveHamiltonian& H, const Vector& x, const OneForm& p) {
  return {x, p, H.grad_x(x, p), H.grad_p(x, p)};
}

PhaseResidual1 lagrangian_phase_residual(const CurveLagrangian& L, const PhaseElement1& e) {
  e.validate();
  const CovectorOnTangent1 d = dL(L, e.x, e.xdot);
  return {e.pdot - d.a, e.p - d.c, Vector(e.x.dim())};
}

PhaseResidual1 hamiltonian_phase_residual(const CurveHamiltonian& H, const PhaseElement1& e) {
  e.validate();
  const CovectorOnCotangent1 d = dH(H, e.x, e.p);
  return {e.pdot + d.a, OneForm(e.x.dim()), e.xdot - d.b};
}

}  // namespace mvt
