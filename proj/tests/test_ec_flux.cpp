/// \file test_ec_flux.cpp
/// \brief Unit tests for the entropy-conservative fluxes.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "core/ec_flux.hpp"
#include "core/flux.hpp"
#include "test_util.hpp"

using namespace rtfp;
using rtfp::testing::random_prim;

TEST_CASE("logarithmic mean") {
  CHECK(log_mean(1.0, std::exp(1.0)) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  CHECK(log_mean(3.7, 3.7) == doctest::Approx(3.7).epsilon(1e-15));
  CHECK(log_mean(2.0, 8.0) ==
        doctest::Approx(6.0 / std::log(4.0)).epsilon(1e-14));

  SUBCASE("symmetry and bounds") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> logs(-6.0, 6.0);
    for (int i = 0; i < 2000; ++i) {
      const double a = std::pow(10.0, logs(rng));
      const double b = std::pow(10.0, logs(rng));
      const double m = log_mean(a, b);
      CHECK(m == doctest::Approx(log_mean(b, a)).epsilon(1e-14));
      CHECK(m >= std::min(a, b) * (1.0 - 1e-14));
      CHECK(m <= 0.5 * (a + b) * (1.0 + 1e-14));
    }
  }

  SUBCASE("series branch joins the direct formula") {
    // Across the switch at f^2 = 1e-4 the two branches must agree to
    // near machine precision.
    for (double x : {1e-3, 2e-2, 2.1e-2, 1e-1}) {
      const double direct = x / std::log1p(x) * (1.0);
      CHECK(log_mean(1.0 + x, 1.0) == doctest::Approx(direct).epsilon(1e-13));
    }
  }
}

TEST_CASE("two-point flux is consistent") {
  std::mt19937 rng(19);
  for (int i = 0; i < 2000; ++i) {
    const FluidPrim w = random_prim(rng, 0.95, -3.0, 3.0);
    const double gamma = 1.05 + 0.9 * (i % 13) / 13.0;
    for (Dir dir : {Dir::X, Dir::Y}) {
      const Vec5 num = ec_flux_fluid(w, w, gamma, dir);
      const Vec5 exact = fluid_flux(w, gamma, dir);
      CHECK((num - exact).norm() <= 1e-12 * (1.0 + exact.norm()));
    }
  }
}

TEST_CASE("two-point flux is symmetric in its arguments") {
  std::mt19937 rng(23);
  for (int i = 0; i < 500; ++i) {
    const FluidPrim wl = random_prim(rng);
    const FluidPrim wr = random_prim(rng);
    for (Dir dir : {Dir::X, Dir::Y}) {
      const Vec5 lr = ec_flux_fluid(wl, wr, 1.4, dir);
      const Vec5 rl = ec_flux_fluid(wr, wl, 1.4, dir);
      CHECK((lr - rl).norm() <= 1e-13 * (1.0 + lr.norm()));
    }
  }
}

TEST_CASE("two-point flux satisfies the entropy condition") {
  // [[V]] . F - [[psi]] = 0 characterizes entropy conservation.
  std::mt19937 rng(29);
  for (int i = 0; i < 2000; ++i) {
    const FluidPrim wl = random_prim(rng, 0.9);
    FluidPrim wr = random_prim(rng, 0.9);
    if (i % 3 == 0) {
      // Also probe near-coincident pairs where the log means degenerate.
      wr = wl;
      wr.rho *= 1.0 + 1e-7;
      wr.p *= 1.0 - 1e-7;
      wr.u *= 1.0 - 1e-8;
    }
    const double gamma = 1.05 + 0.9 * (i % 13) / 13.0;
    for (Dir dir : {Dir::X, Dir::Y}) {
      const Vec5 f = ec_flux_fluid(wl, wr, gamma, dir);
      const Vec5 v_l = entropy_variables(wl, gamma);
      const Vec5 v_r = entropy_variables(wr, gamma);
      const double psi_l = entropy_potential(wl, dir);
      const double psi_r = entropy_potential(wr, dir);
      const double resid = (v_r - v_l).dot(f) - (psi_r - psi_l);
      // Roundoff of the identity scales with the undifferenced terms, so
      // near-coincident pairs are normalized by those magnitudes.
      const double scale = (v_l.norm() + v_r.norm()) * f.norm() +
                           std::abs(psi_l) + std::abs(psi_r) + 1e-100;
      CHECK(std::abs(resid) / scale < 1e-13);
    }
  }
}

TEST_CASE("combination weights satisfy the order conditions") {
  for (int p = 1; p <= 3; ++p) {
    double first = 0.0;
    for (int r = 1; r <= p; ++r) {
      first += r * ec_combination_weight(p, r);
    }
    CHECK(first == doctest::Approx(1.0).epsilon(1e-15));
    for (int s = 2; s <= p; ++s) {
      double cond = 0.0;
      for (int r = 1; r <= p; ++r) {
        cond += std::pow(r, 2 * s - 1) * ec_combination_weight(p, r);
      }
      CHECK(cond == doctest::Approx(0.0).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(ec_combination_weight(4, 1), Error);
  CHECK_THROWS_AS(ec_combination_weight(2, 3), Error);
}

TEST_CASE("high-order flux is consistent") {
  std::mt19937 rng(31);
  for (int p = 1; p <= 3; ++p) {
    for (int i = 0; i < 200; ++i) {
      const FluidPrim w = random_prim(rng);
      const std::vector<FluidPrim> window(2 * p, w);
      const Vec5 num = ec_flux_high_order(window, 1.4, Dir::X, p);
      const Vec5 exact = fluid_flux(w, 1.4, Dir::X);
      CHECK((num - exact).norm() <= 1e-12 * (1.0 + exact.norm()));
    }
  }
}

namespace {

/// Smooth periodic primitive profile used for order-of-accuracy checks.
FluidPrim profile(double x) {
  FluidPrim w;
  w.rho = 2.0 + std::sin(2.0 * M_PI * x);
  w.u = Vec3(0.3 + 0.1 * std::cos(2.0 * M_PI * x),
             -0.2 + 0.05 * std::sin(2.0 * M_PI * x), 0.1);
  w.p = 1.0 + 0.2 * std::cos(2.0 * M_PI * x);
  return w;
}

/// Max-norm error of the flux-difference derivative against an accurate
/// finite-difference derivative of the exact flux along the profile.
double derivative_error(int n, int p, double gamma) {
  const double dx = 1.0 / n;
  std::vector<FluidPrim> cells(n);
  for (int i = 0; i < n; ++i) {
    cells[i] = profile((i + 0.5) * dx);
  }
  auto wrap = [&](int i) { return cells[((i % n) + n) % n]; };
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    std::vector<FluidPrim> wl(2 * p);
    std::vector<FluidPrim> wr(2 * p);
    for (int k = 0; k < 2 * p; ++k) {
      wl[k] = wrap(i - p + k);      // window of interface i - 1/2
      wr[k] = wrap(i - p + 1 + k);  // window of interface i + 1/2
    }
    const Vec5 f_minus = ec_flux_high_order(wl, gamma, Dir::X, p);
    const Vec5 f_plus = ec_flux_high_order(wr, gamma, Dir::X, p);
    const Vec5 num = (f_plus - f_minus) / dx;

    const double x = (i + 0.5) * dx;
    const double h = 1e-6;
    const Vec5 exact = (fluid_flux(profile(x + h), gamma, Dir::X) -
                        fluid_flux(profile(x - h), gamma, Dir::X)) /
                       (2.0 * h);
    err = std::max(err, (num - exact).lpNorm<Eigen::Infinity>());
  }
  return err;
}

}  // namespace

TEST_CASE("high-order flux reaches its design order") {
  const double gamma = 5.0 / 3.0;
  // Expected convergence rates 2p; the finest grid is kept coarse enough
  // that the error stays far above the 1e-6 noise of the reference.
  struct Setup {
    int p;
    int coarse;
    double min_rate;
  };
  for (const Setup s : {Setup{1, 32, 1.7}, Setup{2, 16, 3.6}, Setup{3, 32, 5.3}}) {
    const double e1 = derivative_error(s.coarse, s.p, gamma);
    const double e2 = derivative_error(2 * s.coarse, s.p, gamma);
    const double rate = std::log2(e1 / e2);
    CAPTURE(s.p);
    CAPTURE(e1);
    CAPTURE(e2);
    CHECK(rate >= s.min_rate);
  }
}

TEST_CASE("periodic ring conserves total entropy semi-discretely") {
  // Sum over cells of V_i . (F_{i+1/2} - F_{i-1/2}) telescopes to zero for
  // an entropy-conservative flux on a periodic ring.
  std::mt19937 rng(37);
  const double gamma = 4.0 / 3.0;
  const int n = 16;
  for (int p = 1; p <= 3; ++p) {
    std::vector<FluidPrim> cells(n);
    for (int i = 0; i < n; ++i) {
      cells[i] = random_prim(rng, 0.6, -0.5, 0.5);
    }
    auto wrap = [&](int i) { return cells[((i % n) + n) % n]; };
    double total = 0.0;
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
      std::vector<FluidPrim> wl(2 * p);
      std::vector<FluidPrim> wr(2 * p);
      for (int k = 0; k < 2 * p; ++k) {
        wl[k] = wrap(i - p + k);
        wr[k] = wrap(i - p + 1 + k);
      }
      const Vec5 f_minus = ec_flux_high_order(wl, gamma, Dir::X, p);
      const Vec5 f_plus = ec_flux_high_order(wr, gamma, Dir::X, p);
      const Vec5 v = entropy_variables(cells[i], gamma);
      total += v.dot(f_plus - f_minus);
      scale += std::abs(v.dot(f_plus)) + std::abs(v.dot(f_minus));
    }
    CHECK(std::abs(total) <= 1e-12 * (1.0 + scale));
  }
}
