#pragma once

// Lagrangian and Hamiltonian sides of the triple: scalar fields with
// derivative access, Legendre maps and phase-dynamics residuals.
//
// Bivector partials follow one convention throughout: the partial with
// respect to xdot^{mu nu} is the antisymmetrized formal partial
//   p_{mu nu} = 1/2 (d~_{mu nu} - d~_{nu mu}) L,
// where d~ differentiates the full-array expression with all entries treated
// as independent. Equivalently p_{mu nu} = 1/2 dL/d(slot mu<nu). Under the
// full-sum pairing <p, w> = sum_{mu nu} p_{mu nu} w^{mu nu} a degree-1
// homogeneous L satisfies <dL/dxdot, w> = L exactly.

#include <cstddef>
#include <functional>
#include <memory>

#include "mvt/geometry.hpp"
#include "mvt/tulczyjew.hpp"

namespace mvt {

/// Central-difference step for a variable of magnitude |v|.
double fd_step(double v) noexcept;

/// Scalar field on the bivector bundle. Implementations must be pure; the
/// kernels evaluate them concurrently from several threads.
class LagrangianField {
 public:
  virtual ~LagrangianField() = default;
  [[nodiscard]] virtual std::size_t dim() const = 0;
  /// Throws DomainError outside the field's domain.
  virtual double value(const Vector& x, const Bivector& w) const = 0;
  /// dL/dx^rho. Default: central differences of value().
  virtual OneForm grad_x(const Vector& x, const Bivector& w) const;
  /// dL/dxdot^{mu nu}. Default: central differences of value() on each
  /// independent slot, halved.
  virtual MomentumBivector momentum(const Vector& x, const Bivector& w) const;
};

/// Scalar field on the covariant bivector bundle (the phase space).
class HamiltonianField {
 public:
  virtual ~HamiltonianField() = default;
  [[nodiscard]] virtual std::size_t dim() const = 0;
  virtual double value(const Vector& x, const MomentumBivector& p) const = 0;
  virtual OneForm grad_x(const Vector& x, const MomentumBivector& p) const;
  /// dH/dp_{mu nu}, same convention as LagrangianField::momentum.
  virtual Bivector velocity(const Vector& x, const MomentumBivector& p) const;
};

/// L(w) = sqrt((w|w)) with (.|.) induced by a constant metric. Defined on
/// positive bivectors only.
class NambuGotoLagrangian final : public LagrangianField {
 public:
  explicit NambuGotoLagrangian(const Metric& g);
  [[nodiscard]] std::size_t dim() const override { return h_.dim(); }
  double value(const Vector& x, const Bivector& w) const override;
  OneForm grad_x(const Vector& x, const Bivector& w) const override;
  /// p = h xdot / rho, rho = sqrt(h xdot xdot).
  MomentumBivector momentum(const Vector& x, const Bivector& w) const override;
  [[nodiscard]] const FiberMetric& fiber_metric() const noexcept { return h_; }

 private:
  FiberMetric h_;
};

/// L(w) = sqrt(sum_{kappa lambda} (w^{kappa lambda})^2), x-independent.
/// The value is defined everywhere, the momentum only away from w = 0.
class PlateauLagrangian final : public LagrangianField {
 public:
  explicit PlateauLagrangian(std::size_t dim);
  [[nodiscard]] std::size_t dim() const override { return dim_; }
  double value(const Vector& x, const Bivector& w) const override;
  OneForm grad_x(const Vector& x, const Bivector& w) const override;
  MomentumBivector momentum(const Vector& x, const Bivector& w) const override;

 private:
  std::size_t dim_;
};

/// L = constant.
class ConstantLagrangian final : public LagrangianField {
 public:
  ConstantLagrangian(std::size_t dim, double c) : dim_(dim), c_(c) {}
  [[nodiscard]] std::size_t dim() const override { return dim_; }
  double value(const Vector&, const Bivector&) const override { return c_; }
  OneForm grad_x(const Vector& x, const Bivector&) const override { return OneForm(x.dim()); }
  MomentumBivector momentum(const Vector&, const Bivector& w) const override {
    return MomentumBivector(w.dim());
  }

 private:
  std::size_t dim_;
  double c_;
};

/// User-supplied Lagrangian; derivatives by central differences.
class FunctionLagrangian final : public LagrangianField {
 public:
  using Fn = std::function<double(const Vector&, const Bivector&)>;
  FunctionLagrangian(std::size_t dim, Fn fn) : dim_(dim), fn_(std::move(fn)) {}
  [[nodiscard]] std::size_t dim() const override { return dim_; }
  double value(const Vector& x, const Bivector& w) const override { return fn_(x, w); }

 private:
  std::size_t dim_;
  Fn fn_;
};

class FunctionHamiltonian final : public HamiltonianField {
 public:
  using Fn = std::function<double(const Vector&, const MomentumBivector&)>;
  FunctionHamiltonian(std::size_t dim, Fn fn) : dim_(dim), fn_(std::move(fn)) {}
  [[nodiscard]] std::size_t dim() const override { return dim_; }
  double value(const Vector& x, const MomentumBivector& p) const override { return fn_(x, p); }

 private:
  std::size_t dim_;
  Fn fn_;
};

/// Generating family (p, r) -> r (sqrt((p|p)) - 1) for the Nambu-Goto
/// dynamics, with (.|.) the dual fiber metric.
class MorseFamily {
 public:
  explicit MorseFamily(const Metric& g);
  [[nodiscard]] std::size_t dim() const noexcept { return dual_.dim(); }
  /// sqrt((p|p)); throws DomainError when (p|p) <= 0.
  double norm(const MomentumBivector& p) const;
  double value(const MomentumBivector& p, double r) const;
  /// dH/dr = sqrt((p|p)) - 1.
  double d_dr(const MomentumBivector& p, double r) const;
  /// dH/dp = r (h* p) / sqrt((p|p)).
  Bivector d_dp(const MomentumBivector& p, double r) const;
  /// The family frozen at one value of the auxiliary parameter.
  [[nodiscard]] std::unique_ptr<HamiltonianField> at(double r) const;
  [[nodiscard]] const FiberMetric& dual_metric() const noexcept { return dual_; }

 private:
  FiberMetric dual_;
};

/// Legendre map P L(x, w) = (x, dL/dxdot).
MomentumBivector partial_L_bivector(const LagrangianField& L, const Vector& x, const Bivector& w);

/// dL(x, w) as an element of T* of the bivector bundle.
CovectorOnConfigSpace dL(const LagrangianField& L, const Vector& x, const Bivector& w);
/// dH(x, p) as an element of T* of the phase space.
CovectorOnPhaseSpace dH(const HamiltonianField& H, const Vector& x, const MomentumBivector& p);

/// Lagrangian-side phase residual; e lies on the dynamics iff both vanish.
struct PhaseResidual2 {
  OneForm r_force;         // ybar - dL/dx
  MomentumBivector r_mom;  // p - dL/dxdot
  [[nodiscard]] double max_norm() const;
};

struct HamiltonianResidual2 {
  OneForm r_force;  // ybar + dH/dx
  Bivector r_vel;   // xdot - dH/dp
  [[nodiscard]] double max_norm() const;
};

PhaseResidual2 lagrangian_phase_residual(const LagrangianField& L, const PhaseElement2& e);
HamiltonianResidual2 hamiltonian_phase_residual(const HamiltonianField& H, const PhaseElement2& e);

/// Full unrestricted sum p_{mu nu} w^{mu nu}.
double euler_pairing(const MomentumBivector& p, const Bivector& w);

// ---- n = 1 ---------------------------------------------------------------

/// L(x, v) on TM. Same purity requirement as LagrangianField.
class CurveLagrangian {
 public:
  virtual ~CurveLagrangian() = default;
  [[nodiscard]] virtual std::size_t dim() const = 0;
  virtual double value(const Vector& x, const Vector& v) const = 0;
  virtual OneForm grad_x(const Vector& x, const Vector& v) const;
  virtual OneForm grad_v(const Vector& x, const Vector& v) const;
};

/// L = 1/2 |v|^2 - 1/2 k |x|^2 (free particle for k = 0, oscillator for k > 0).
class QuadraticLagrangian final : public CurveLagrangian {
 public:
  QuadraticLagrangian(std::size_t dim, double stiffness) : dim_(dim), k_(stiffness) {}
  [[nodiscard]] std::size_t dim() const override { return dim_; }
  double value(const Vector& x, const Vector& v) const override;
  OneForm grad_x(const Vector& x, const Vector& v) const override;
  OneForm grad_v(const Vector& x, const Vector& v) const override;

 private:
  std::size_t dim_;
  double k_;
};

class CurveHamiltonian {
 public:
  virtual ~CurveHamiltonian() = default;
  [[nodiscard]] virtual std::size_t dim() const = 0;
  virtual double value(const Vector& x, const OneForm& p) const = 0;
  virtual OneForm grad_x(const Vector& x, const OneForm& p) const;
  virtual Vector grad_p(const Vector& x, const OneForm& p) const;
};

/// H = 1/2 |p|^2 + 1/2 k |x|^2.
class QuadraticHamiltonian final : public CurveHamiltonian {
 public:
  QuadraticHamiltonian(std::size_t dim, double stiffness) : dim_(dim), k_(stiffness) {}
  [[nodiscard]] std::size_t dim() const override { return dim_; }
  double value(const Vector& x, const OneForm& p) const override;
  OneForm grad_x(const Vector& x, const OneForm& p) const override;
  Vector grad_p(const Vector& x, const OneForm& p) const override;

 private:
  std::size_t dim_;
  double k_;
};

CovectorOnTangent1 dL(const CurveLagrangian& L, const Vector& x, const Vector& v);
CovectorOnCotangent1 dH(const CurveHamiltonian& H, const Vector& x, const OneForm& p);

struct PhaseResidual1 {
  OneForm r_force;  // pdot - dL/dx   |  pdot + dH/dx
  OneForm r_mom;    // p - dL/dxdot   |  (unused on the Hamiltonian side)
  Vector r_vel;     // (unused)       |  xdot - dH/dp
};

PhaseResidual1 lagrangian_phase_residual(const CurveLagrangian& L, const PhaseElement1& e);
PhaseResidual1 hamiltonian_phase_residual(const CurveHamiltonian& H, const PhaseElement1& e);

}  // namespace mvt
