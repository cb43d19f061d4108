#include <doctest.h>

#include <cmath>

#include "mvt/dynamics.hpp"
#include "oracles.hpp"

using namespace mvt;

namespace {

Bivector e12(std::size_t n) {
  Bivector w(n);
  w.set(0, 1, 1.0);
  return w;
}

// Positive bivector for the given metric: resample until (w|w) > 0.
Bivector positive(oracle::Rng& rng, const Metric& g) {
  const FiberMetric h = induced_fiber_metric(g);
  for (;;) {
    Bivector w = rng.antisym<Bivector>(g.dim());
    if (scalar_product(h, w, w) > 0.1) return w;
  }
}

// Central-difference oracle for dL/dslot, halved (Convention B).
MomentumBivector fd_momentum(const LagrangianField& L, const Vector& x, const Bivector& w) {
  MomentumBivector p(w.dim());
  for (std::size_t k = 0; k < w.slots(); ++k) {
    const double h = 1e-6 * std::max(1.0, std::abs(w.slot(k)));
    Bivector a = w, b = w;
    a.slot(k) += h;
    b.slot(k) -= h;
    p.slot(k) = 0.5 * (L.value(x, a) - L.value(x, b)) / (2.0 * h);
  }
  return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_SUITE("dynamics") {
  TEST_CASE("Nambu-Goto values and momenta") {
    const NambuGotoLagrangian L(Metric::euclidean(3));
    const Vector x(3);
    CHECK(L.value(x, e12(3)) == 2.0);
    const MomentumBivector p = L.momentum(x, e12(3));
    CHECK(p(0, 1) == 1.0);
    CHECK(p(0, 2) == 0.0);
    CHECK(p(1, 0) == -1.0);
    CHECK(L.grad_x(x, e12(3)) == OneForm(3));

    Bivector timelike(4);
    timelike.set(0, 1, 1.0);
    const NambuGotoLagrangian Lm(Metric::minkowski(4));
    CHECK_THROWS_AS(Lm.value(Vector(4), timelike), DomainError);
    CHECK_THROWS_AS(Lm.momentum(Vector(4), timelike), DomainError);
  }

  TEST_CASE("Plateau values and momenta") {
    const PlateauLagrangian L(3);
    const Vector x(3);
    CHECK(L.value(x, e12(3)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(L.momentum(x, e12(3))(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    const double zt = 0.4, zs = -0.9;
    const Bivector g = wedge(Vector{1, 0, zt}, Vector{0, 1, zs});
    CHECK(L.value(x, g) == doctest::Approx(std::sqrt(2.0) * std::sqrt(1 + zt * zt + zs * zs)).epsilon(1e-15));
    CHECK(L.value(x, Bivector(3)) == 0.0);
    CHECK_THROWS_AS(L.momentum(x, Bivector(3)), DomainError);
    CHECK_THROWS_AS(PlateauLagrangian(1), DimensionError);
  }

  TEST_CASE("constant Lagrangian has zero momentum") {
    const ConstantLagrangian L(3, 5.0);
    oracle::Rng rng(21);
    CHECK(L.momentum(rng.vector(3), rng.antisym<Bivector>(3)) == MomentumBivector(3));
    CHECK(partial_L_bivector(L, rng.vector(3), rng.antisym<Bivector>(3)) == MomentumBivector(3));
  }

  TEST_CASE("homogeneity and the Euler identity") {
    oracle::Rng rng(22);
    const Metric eu = Metric::euclidean(4), mk = Metric::minkowski(4);
    const NambuGotoLagrangian ng_e(eu), ng_m(mk);
    const PlateauLagrangian pl(4);
    struct Case {
      const LagrangianField* L;
      const Metric* g;
    } cases[] = {{&ng_e, &eu}, {&ng_m, &mk}, {&pl, &eu}};
    for (const Case& c : cases)
      for (int trial = 0; trial < 100; ++trial) {
        const Vector x = rng.vector(4);
        const Bivector w = positive(rng, *c.g);
        const double l = c.L->value(x, w);
        for (double lam : {0.5, 2.0, 10.0}) CHECK(rel(c.L->value(x, lam * w), lam * l) <= 1e-12);
        CHECK(rel(euler_pairing(c.L->momentum(x, w), w), l) <= 1e-8);
      }
  }

  TEST_CASE("closed-form derivatives match finite differences") {
    oracle::Rng rng(23);
    const Metric g(3, {1.5, 0.2, 0.0, 0.2, 1.0, 0.1, 0.0, 0.1, 2.0});
    const NambuGotoLagrangian ng(g);
    const PlateauLagrangian pl(3);
    for (const LagrangianField* L : {static_cast<const LagrangianField*>(&ng), static_cast<const LagrangianField*>(&pl)})
      for (int trial = 0; trial < 50; ++trial) {
        const Vector x = rng.vector(3);
        const Bivector w = positive(rng, g);
        const MomentumBivector exact = L->momentum(x, w);
        const MomentumBivector fd = fd_momentum(*L, x, w);
        for (std::size_t k = 0; k < w.slots(); ++k) CHECK(rel(exact.slot(k), fd.slot(k)) <= 1e-6);
      }

    // The generic fallback against the closed forms.
    const FunctionLagrangian wrapped(3, [&](const Vector& x, const Bivector& w) { return ng.value(x, w); });
    for (int trial = 0; trial < 50; ++trial) {
      const Vector x = rng.vector(3);
      const Bivector w = positive(rng, g);
      const MomentumBivector a = wrapped.momentum(x, w), b = ng.momentum(x, w);
      for (std::size_t k = 0; k < w.slots(); ++k) CHECK(rel(a.slot(k), b.slot(k)) <= 1e-6);
      const OneForm gx = wrapped.grad_x(x, w);
      for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(gx[k]) <= 1e-6);
    }

    // x-dependent user field: L = |x|^2 * sqrt(1 + slots^2).
    const FunctionLagrangian xdep(3, [](const Vector& x, const Bivector& w) {
      double s = 1.0, r = 0.0;
      for (double v : w.independent()) s += v * v;
      for (double v : x.values()) r += v * v;
      return r * std::sqrt(s);
    });
    const Vector x = rng.vector(3);
    const Bivector w = rng.antisym<Bivector>(3);
    double s = 1.0;
    for (double v : w.independent()) s += v * v;
    const OneForm gx = xdep.grad_x(x, w);
    for (std::size_t k = 0; k < 3; ++k) CHECK(rel(gx[k], 2.0 * x[k] * std::sqrt(s)) <= 1e-6);
  }

  TEST_CASE("Morse family") {
    oracle::Rng rng(24);
    for (const Metric& g : {Metric::euclidean(3), Metric::minkowski(3)}) {
      const MorseFamily morse(g);
      const NambuGotoLagrangian L(g);
      for (int trial = 0; trial < 100; ++trial) {
        const Bivector w = positive(rng, g);
        const MomentumBivector p = L.momentum(Vector(3), w);
        CHECK(std::abs(morse.norm(p) - 1.0) <= 1e-10);
        const double r = rng.uniform(0.1, 5.0);
        CHECK(std::abs(morse.value(p, r)) <= 1e-10);
        CHECK(morse.d_dr(p, r) == doctest::Approx(morse.norm(p) - 1.0));

        // dH/dp against finite differences of the value.
        const MomentumBivector q = rng.antisym<MomentumBivector>(3) + p;
        if (scalar_product(morse.dual_metric(), q, q) <= 0.1) continue;
        const Bivector v = morse.d_dp(q, r);
        for (std::size_t k = 0; k < q.slots(); ++k) {
          MomentumBivector a = q, b = q;
          const double h = 1e-6;
          a.slot(k) += h;
          b.slot(k) -= h;
          const double fd = 0.5 * (morse.value(a, r) - morse.value(b, r)) / (2 * h);
          CHECK(rel(v.slot(k), fd) <= 1e-6);
        }
        // The frozen field exposes the same derivative.
        const auto H = morse.at(r);
        const Bivector vf = H->velocity(Vector(3), q);
        for (std::size_t k = 0; k < q.slots(); ++k) CHECK(vf.slot(k) == doctest::Approx(v.slot(k)).epsilon(1e-12));
      }
    }
    const MorseFamily m(Metric::euclidean(3));
    CHECK_THROWS_AS(m.norm(MomentumBivector(3)), DomainError);
  }

  TEST_CASE("phase residuals") {
    oracle::Rng rng(25);
    const Metric g = Metric::euclidean(3);
    const NambuGotoLagrangian L(g);
    PhaseElement2 e = PhaseElement2::zero(3);
    e.x = rng.vector(3);
    e.xdot = positive(rng, g);
    e.p = partial_L_bivector(L, e.x, e.xdot);
    for (double& v : e.pdot.raw()) v = rng.uniform();
    const PhaseResidual2 r = lagrangian_phase_residual(L, e);
    CHECK(r.max_norm() == 0.0);

    // Constant metric: r_force is the trace of y.
    e.y.set(0, 0, 1, 0.25);
    CHECK(lagrangian_phase_residual(L, e).r_force == trace_y(e.y));

    // Perturbing p moves r_mom by the perturbation.
    const MomentumBivector delta = rng.antisym<MomentumBivector>(3);
    PhaseElement2 f = e;
    f.p = e.p + delta;
    const PhaseResidual2 rf = lagrangian_phase_residual(L, f);
    for (std::size_t k = 0; k < delta.slots(); ++k) CHECK(rf.r_mom.slot(k) == doctest::Approx(delta.slot(k)).epsilon(1e-14));

    // Hamiltonian side with the Morse family at r = L(xdot).
    e.y = MixedBlock(3);
    const MorseFamily morse(g);
    const auto H = morse.at(L.value(e.x, e.xdot));
    const HamiltonianResidual2 h = hamiltonian_phase_residual(*H, e);
    CHECK(h.max_norm() <= 1e-12);

    // x-independent H: r_force = trace(y).
    e.y.set(2, 2, 0, -1.0);
    CHECK(hamiltonian_phase_residual(*H, e).r_force == trace_y(e.y));
  }

  TEST_CASE("dL and the Legendre map") {
    oracle::Rng rng(26);
    const NambuGotoLagrangian L(Metric::euclidean(3));
    const Vector x = rng.vector(3);
    const Bivector w = positive(rng, Metric::euclidean(3));
    const CovectorOnConfigSpace d = dL(L, x, w);
    CHECK(d.x == x);
    CHECK(d.xdot == w);
    CHECK(d.a == OneForm(3));
    CHECK(d.c == L.momentum(x, w));
    CHECK_THROWS_AS(dL(L, Vector(2), w), DimensionError);
  }

  TEST_CASE("n = 1: oscillator phase element lies on both sides") {
    // x = cos t, xdot = -sin t, p = xdot, pdot = -x is the motion of
    // L = xdot^2/2 - x^2/2, H = p^2/2 + x^2/2.
    const QuadraticLagrangian L(1, 1.0);
    const QuadraticHamiltonian H(1, 1.0);
    for (double t : {0.0, 0.3, 1.7, 4.0}) {
      const PhaseElement1 e{Vector{std::cos(t)}, OneForm{-std::sin(t)}, Vector{-std::sin(t)}, OneForm{-std::cos(t)}};
      const PhaseResidual1 rl = lagrangian_phase_residual(L, e);
      CHECK(rl.r_force[0] == doctest::Approx(0.0));
      CHECK(rl.r_mom[0] == doctest::Approx(0.0));
      const PhaseResidual1 rh = hamiltonian_phase_residual(H, e);
      CHECK(rh.r_force[0] == doctest::Approx(0.0));
      CHECK(rh.r_vel[0] == doctest::Approx(0.0));

      // beta1 o (motion) = dH, alpha1 o (motion) = dL.
      const auto b = beta1(e);
      const auto dh = dH(H, e.x, e.p);
      CHECK(b.a[0] == doctest::Approx(dh.a[0]));
      CHECK(b.b[0] == doctest::Approx(dh.b[0]));
      const auto a = alpha1(e);
      const auto dl = dL(L, e.x, e.xdot);
      CHECK(a.a[0] == doctest::Approx(dl.a[0]));
      CHECK(a.c[0] == doctest::Approx(dl.c[0]));
    }

    // Finite-difference fallbacks of the generic interfaces.
    struct Wrapped final : CurveLagrangian {
      std::size_t dim() const override { return 2; }
      double value(const Vector& x, const Vector& v) const override {
        return 0.5 * (v[0] * v[0] + v[1] * v[1]) - 0.5 * 3.0 * (x[0] * x[0] + x[1] * x[1]);
      }
    } wrapped;
    const QuadraticLagrangian exact(2, 3.0);
    const Vector x{0.3, -1.2}, v{2.0, 0.5};
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(rel(wrapped.grad_x(x, v)[k], exact.grad_x(x, v)[k]) <= 1e-6);
      CHECK(rel(wrapped.grad_v(x, v)[k], exact.grad_v(x, v)[k]) <= 1e-6);
    }
  }
}
