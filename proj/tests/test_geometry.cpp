#include <doctest.h>

#include <cmath>

#include "mvt/geometry.hpp"
#include "oracles.hpp"

using namespace mvt;

TEST_SUITE("geometry") {
  TEST_CASE("pair packing round trips") {
    for (std::size_t n = 2; n <= 6; ++n) {
      std::size_t k = 0;
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = mu + 1; nu < n; ++nu, ++k) {
          CHECK(pair_index(n, mu, nu) == k);
          CHECK(pair_at(n, k) == std::make_pair(mu, nu));
        }
      CHECK(k == pair_count(n));
    }
  }

  TEST_CASE("antisymmetric accessor is exact") {
    oracle::Rng rng(1);
    for (std::size_t n = 2; n <= 5; ++n) {
      const Bivector u = rng.antisym<Bivector>(n);
      const auto f = oracle::full(u);
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) {
          CHECK(u(mu, nu) == f[mu * n + nu]);
          CHECK(u(mu, nu) == -u(nu, mu));
        }
    }
    Bivector w(3);
    w.set(2, 0, 0.5);
    CHECK(w(0, 2) == -0.5);
    CHECK_THROWS_AS(w.set(1, 1, 1.0), std::invalid_argument);
  }

  TEST_CASE("wedge") {
    const Bivector e12 = wedge(Vector{1, 0, 0}, Vector{0, 1, 0});
    CHECK(e12(0, 1) == 1.0);
    CHECK(e12(0, 2) == 0.0);
    CHECK(e12(1, 2) == 0.0);

    const double zt = 0.3, zs = -1.7;
    const Bivector g = wedge(Vector{1, 0, zt}, Vector{0, 1, zs});
    CHECK(g(0, 1) == 1.0);
    CHECK(g(0, 2) == zs);
    CHECK(g(1, 2) == -zt);

    oracle::Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
      const Vector v = rng.vector(4), u = rng.vector(4);
      CHECK(max_abs(wedge(v, v)) == 0.0);
      CHECK(wedge(v, u) == -wedge(u, v));
      const Bivector w = wedge(v, u);
      for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu) CHECK(w(mu, nu) == doctest::Approx(v[mu] * u[nu] - v[nu] * u[mu]).epsilon(1e-15));
    }
    CHECK_THROWS_AS(wedge(Vector(2), Vector(3)), DimensionError);
  }

  TEST_CASE("contract") {
    Bivector u(3);  // (dx - dy) ^ dz
    u.set(0, 2, 1.0);
    u.set(1, 2, -1.0);
    const Vector z = contract(OneForm{1, 1, 0}, u);
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);
    CHECK(z[2] == 0.0);

    const Vector e2 = contract(OneForm{1, 0, 0}, wedge(Vector{1, 0, 0}, Vector{0, 1, 0}));
    CHECK(e2 == Vector{0, 1, 0});

    oracle::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const OneForm eta = rng.one_form(4);
      const Bivector w = rng.antisym<Bivector>(4);
      const auto f = oracle::full(w);
      const Vector got = contract(eta, w);
      for (std::size_t nu = 0; nu < 4; ++nu) {
        double s = 0.0;
        for (std::size_t mu = 0; mu < 4; ++mu) s += eta[mu] * f[mu * 4 + nu];
        CHECK(got[nu] == doctest::Approx(s).epsilon(1e-14));
      }
      // Linearity in both slots.
      const OneForm eta2 = rng.one_form(4);
      const Bivector w2 = rng.antisym<Bivector>(4);
      const Vector lhs = contract(2.0 * eta + eta2, w);
      const Vector rhs = 2.0 * contract(eta, w) + contract(eta2, w);
      const Vector lhs2 = contract(eta, w + 3.0 * w2);
      const Vector rhs2 = contract(eta, w) + 3.0 * contract(eta, w2);
      for (std::size_t nu = 0; nu < 4; ++nu) {
        CHECK(std::abs(lhs[nu] - rhs[nu]) <= 1e-14);
        CHECK(std::abs(lhs2[nu] - rhs2[nu]) <= 1e-14);
      }
    }
  }

  TEST_CASE("metric validation") {
    CHECK_THROWS_AS(Metric(2, {1, 0.5, 0.4, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Metric(2, {1, 1, 1, 1}), SingularError);
    CHECK_THROWS_AS(Metric(2, {1, 0, 0}), DimensionError);
    CHECK_THROWS_AS(Metric(3, {-1, 0, 0, 0, -1, 0, 0, 0, 1}), std::invalid_argument);
    CHECK(Metric::euclidean(3).signature() == Signature::euclidean);
    CHECK(Metric::minkowski(4).signature() == Signature::lorentz);
    const Metric g(2, {2, 1, 1, 3});
    const Metric gi = g.inverse();
    CHECK(gi(0, 0) == doctest::Approx(0.6));
    CHECK(gi(0, 1) == doctest::Approx(-0.2));
  }

  TEST_CASE("induced fiber metric") {
    const FiberMetric h = induced_fiber_metric(Metric::euclidean(3));
    CHECK(h(0, 1, 0, 1) == 1.0);
    CHECK(h(0, 1, 1, 0) == -1.0);
    CHECK(induced_fiber_metric(Metric::minkowski(4))(0, 1, 0, 1) == -1.0);

    oracle::Rng rng(4);
    std::vector<double> a(16);
    for (double& v : a) v = rng.uniform();
    std::vector<double> g(16);  // a a^T + 4 I, symmetric positive
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = i == j ? 4.0 : 0.0;
        for (int k = 0; k < 4; ++k) s += a[i * 4 + k] * a[j * 4 + k];
        g[i * 4 + j] = s;
      }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < i; ++j) g[i * 4 + j] = g[j * 4 + i];
    const FiberMetric hg = induced_fiber_metric(Metric(4, g));
    for (std::size_t m = 0; m < 4; ++m)
      for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t k = 0; k < 4; ++k)
          for (std::size_t l = 0; l < 4; ++l) {
            CHECK(hg(m, n, k, l) == hg(k, l, m, n));
            CHECK(hg(m, n, k, l) == -hg(n, m, k, l));
            CHECK(hg(m, n, k, l) == -hg(m, n, l, k));
          }
  }

  TEST_CASE("scalar product under the full-sum convention") {
    const FiberMetric h = induced_fiber_metric(Metric::euclidean(3));
    const Bivector e12 = wedge(Vector{1, 0, 0}, Vector{0, 1, 0});
    CHECK(scalar_product(h, e12, e12) == 4.0);
    CHECK(scalar_product(h, Bivector(3), e12) == 0.0);

    oracle::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const Vector v = rng.vector(3), u = rng.vector(3);
      double vv = 0, uu = 0, vu = 0;
      for (int k = 0; k < 3; ++k) {
        vv += v[k] * v[k];
        uu += u[k] * u[k];
        vu += v[k] * u[k];
      }
      const Bivector w = wedge(v, u);
      CHECK(scalar_product(h, w, w) == doctest::Approx(4.0 * (vv * uu - vu * vu)).epsilon(1e-12));
      const Bivector a = rng.antisym<Bivector>(3), b = rng.antisym<Bivector>(3);
      CHECK(scalar_product(h, a, b) == doctest::Approx(scalar_product(h, b, a)).epsilon(1e-15));
    }
  }

  TEST_CASE("dual fiber metric inverts the induced one") {
    // Exact inverse on antisymmetric arrays: (1/4)(g^mk g^nl - g^ml g^nk).
    CHECK(dual_fiber_metric(Metric::euclidean(3))(0, 1, 0, 1) == 0.25);
    CHECK(dual_fiber_metric(Metric(3, {2, 0, 0, 0, 2, 0, 0, 0, 2}))(0, 1, 0, 1) == doctest::Approx(1.0 / 16.0));
    CHECK_THROWS_AS(dual_fiber_metric(Metric(2, {1, 2, 2, 4})), SingularError);

    oracle::Rng rng(6);
    for (const Metric& g : {Metric::euclidean(4), Metric::minkowski(4), Metric(3, {2, 0.3, 0, 0.3, 1, 0.1, 0, 0.1, 3})}) {
      const FiberMetric h = induced_fiber_metric(g);
      const FiberMetric hd = dual_fiber_metric(g);
      for (int trial = 0; trial < 20; ++trial) {
        const Bivector w = rng.antisym<Bivector>(g.dim());
        const Bivector back = raise(hd, lower(h, w));
        for (std::size_t k = 0; k < w.slots(); ++k) CHECK(back.slot(k) == doctest::Approx(w.slot(k)).epsilon(1e-12));
        const MomentumBivector p = lower(h, w);
        CHECK(scalar_product(hd, p, p) == doctest::Approx(scalar_product(h, w, w)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("full pairing doubles the slot pairing") {
    oracle::Rng rng(7);
    const MomentumBivector p = rng.antisym<MomentumBivector>(4);
    const Bivector u = rng.antisym<Bivector>(4);
    double s = 0.0;
    for (std::size_t k = 0; k < p.slots(); ++k) s += p.slot(k) * u.slot(k);
    CHECK(full_pairing(p, u) == doctest::Approx(2.0 * s).epsilon(1e-15));
  }
}
