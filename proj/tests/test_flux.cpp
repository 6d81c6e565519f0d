/// \file test_flux.cpp
/// \brief Unit tests for physical fluxes, sources and the entropy pair.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/flux.hpp"

using namespace rtfp;

namespace {

FluidPrim random_prim(std::mt19937& rng, double max_speed = 0.9) {
  std::uniform_real_distribution<double> log_rho(-3.0, 2.0);
  std::uniform_real_distribution<double> log_p(-4.0, 2.0);
  std::uniform_real_distribution<double> speed(0.0, max_speed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  FluidPrim w;
  w.rho = std::pow(10.0, log_rho(rng));
  w.p = std::pow(10.0, log_p(rng));
  Vec3 dir(unit(rng), unit(rng), unit(rng));
  if (dir.norm() < 1e-12) {
    dir = Vec3(1.0, 0.0, 0.0);
  }
  w.u = speed(rng) * dir.normalized();
  return w;
}

Vec8 random_em(std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(-2.0, 2.0);
  Vec8 em;
  for (int k = 0; k < 8; ++k) {
    em(k) = unit(rng);
  }
  return em;
}

}  // namespace

TEST_CASE("fluid flux against conserved variables") {
  FluidPrim w;
  w.rho = 1.0;
  w.u = Vec3(0.5, 0.0, 0.0);
  w.p = 1.0;
  const double gamma = 4.0 / 3.0;
  const Vec5 q = fluid_prim_to_cons(w, gamma);

  const Vec5 fx = fluid_flux(w, gamma, Dir::X);
  CHECK(fx(0) == doctest::Approx(q(0) * 0.5).epsilon(1e-14));
  CHECK(fx(1) == doctest::Approx(q(1) * 0.5 + 1.0).epsilon(1e-14));
  CHECK(fx(2) == doctest::Approx(0.0));
  CHECK(fx(3) == doctest::Approx(0.0));
  CHECK(fx(4) == doctest::Approx(q(1)).epsilon(1e-14));

  const Vec5 fy = fluid_flux(w, gamma, Dir::Y);
  CHECK(fy(0) == doctest::Approx(0.0));
  CHECK(fy(1) == doctest::Approx(0.0));
  CHECK(fy(2) == doctest::Approx(1.0));  // pressure only
  CHECK(fy(3) == doctest::Approx(0.0));
  CHECK(fy(4) == doctest::Approx(q(2)));
}

TEST_CASE("maxwell flux reference values") {
  Vec8 em;
  em << 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 0.0, 0.0;
  const Vec8 fx = maxwell_flux(em, 1.0, 1.0, Dir::X);
  Vec8 fx_ref;
  fx_ref << 0.0, -6.0, 5.0, 0.0, 3.0, -2.0, 4.0, 1.0;
  CHECK((fx - fx_ref).norm() == doctest::Approx(0.0));

  const Vec8 fy = maxwell_flux(em, 1.0, 1.0, Dir::Y);
  Vec8 fy_ref;
  fy_ref << 6.0, 0.0, -4.0, -3.0, 0.0, 1.0, 5.0, 2.0;
  CHECK((fy - fy_ref).norm() == doctest::Approx(0.0));
}

TEST_CASE("maxwell flux cleaning-speed slots") {
  Vec8 em;
  em << 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0;
  const double kappa = 2.0;
  const double chi = 3.0;
  const Vec8 fx = maxwell_flux(em, kappa, chi, Dir::X);
  CHECK(fx(comp::Bx) == doctest::Approx(kappa * 8.0));
  CHECK(fx(comp::Ex) == doctest::Approx(chi * 7.0));
  CHECK(fx(comp::Phi) == doctest::Approx(chi * 4.0));
  CHECK(fx(comp::Psi) == doctest::Approx(kappa * 1.0));
  const Vec8 fy = maxwell_flux(em, kappa, chi, Dir::Y);
  CHECK(fy(comp::By) == doctest::Approx(kappa * 8.0));
  CHECK(fy(comp::Ey) == doctest::Approx(chi * 7.0));
  CHECK(fy(comp::Phi) == doctest::Approx(chi * 5.0));
  CHECK(fy(comp::Psi) == doctest::Approx(kappa * 2.0));
}

TEST_CASE("lorentz source matches the cross-product formula") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const FluidPrim w = random_prim(rng);
    const Vec8 em = random_em(rng);
    const double r = -2.5;
    const Vec5 s = lorentz_source(w, em, r);
    const Vec3 e_field = em.segment<3>(comp::Ex);
    const Vec3 b_field = em.segment<3>(comp::Bx);
    const double dens = w.rho * lorentz_factor(w.u);
    CHECK(s(0) == 0.0);
    CHECK((s.segment<3>(1) - r * dens * (e_field + w.u.cross(b_field)))
              .norm() < 1e-14 * (1.0 + s.norm()));
    CHECK(s(4) ==
          doctest::Approx(r * dens * w.u.dot(e_field)).epsilon(1e-13));
  }
}

TEST_CASE("entropy variables annihilate the lorentz source") {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const FluidPrim w = random_prim(rng, 0.99);
    const Vec8 em = random_em(rng);
    const double gamma = 1.0 + 0.9 * (i % 10 + 1) / 10.0;
    const Vec5 v = entropy_variables(w, gamma);
    const Vec5 s = lorentz_source(w, em, 3.7);
    const double denom = v.norm() * s.norm() + 1e-300;
    CHECK(std::abs(v.dot(s)) / denom < 1e-13);
  }
}

TEST_CASE("maxwell source slots, scale and charge density") {
  PlasmaParams par;
  par.r_i = 2.0;
  par.r_e = -1.0;
  par.chi = 3.0;
  par.source_scale = 4.0 * M_PI;
  FluidPrim ion{1.0, Vec3(0.6, 0.0, 0.0), 0.1};
  FluidPrim ele{2.0, Vec3::Zero(), 0.1};
  // D_i = 1.25, D_e = 2: j = (1.5, 0, 0), rho_c = 0.5.
  const Vec8 s = maxwell_source(ion, ele, par);
  CHECK(s(comp::Bx) == 0.0);
  CHECK(s(comp::By) == 0.0);
  CHECK(s(comp::Bz) == 0.0);
  CHECK(s(comp::Ex) == doctest::Approx(-4.0 * M_PI * 1.5).epsilon(1e-14));
  CHECK(s(comp::Ey) == doctest::Approx(0.0));
  CHECK(s(comp::Ez) == doctest::Approx(0.0));
  CHECK(s(comp::Phi) ==
        doctest::Approx(4.0 * M_PI * 3.0 * 0.5).epsilon(1e-14));
  CHECK(s(comp::Psi) == 0.0);
}

TEST_CASE("resistive source frozen value") {
  PlasmaParams par;
  par.r_i = 2.0;
  par.r_e = -1.0;
  par.eta = 0.5;
  FluidPrim ion{1.0, Vec3(0.6, 0.0, 0.0), 0.1};
  FluidPrim ele{2.0, Vec3::Zero(), 0.1};
  // omega^2 = 6, j = (1.5,0,0), rho_c = 0.5, drift = (0.25,0,0),
  // lambda = 7/6, rho_0 = 5/24, coefficient = -1.
  const Vec5 s = resistive_source(ion, ele, par);
  CHECK(s(0) == 0.0);
  CHECK(s(1) == doctest::Approx(-139.0 / 96.0).epsilon(1e-14));
  CHECK(s(2) == doctest::Approx(0.0));
  CHECK(s(3) == doctest::Approx(0.0));
  CHECK(s(4) == doctest::Approx(-37.0 / 144.0).epsilon(1e-14));

  SUBCASE("zero resistivity disables friction") {
    par.eta = 0.0;
    CHECK(resistive_source(ion, ele, par).norm() == 0.0);
  }
  SUBCASE("static plasma feels no friction") {
    par.eta = 0.5;
    ion.u.setZero();
    CHECK(resistive_source(ion, ele, par).norm() < 1e-15);
  }
}

TEST_CASE("combined source conserves total momentum and energy") {
  PlasmaParams par;
  par.r_i = 1000.0;
  par.r_e = -1000.0;
  par.eta = 0.01;
  std::mt19937 rng(23);
  for (int i = 0; i < 50; ++i) {
    PrimState w;
    w.ion = random_prim(rng);
    w.ele = random_prim(rng);
    w.em = random_em(rng);
    const Vec18 s = combined_source(w, par);
    const Vec5 total = s.segment<5>(comp::kIonOffset) +
                       Vec5(s.segment<5>(comp::kEleOffset));
    // Mass rows vanish identically; momentum and energy rows reduce to the
    // sum of the two Lorentz forces because the friction cancels.
    const Vec5 lorentz_sum = lorentz_source(w.ion, w.em, par.r_i) +
                             Vec5(lorentz_source(w.ele, w.em, par.r_e));
    CHECK((total - lorentz_sum).norm() < 1e-12 * (1.0 + lorentz_sum.norm()));
  }
}

TEST_CASE("entropy density of a uniform reference state") {
  // rho = 1, p = e, gamma = 4/3: s = 1, U = -Gamma/(gamma-1) = -3.
  FluidPrim w{1.0, Vec3::Zero(), std::exp(1.0)};
  CHECK(entropy_density(w, 4.0 / 3.0) == doctest::Approx(-3.0).epsilon(1e-14));
  const EntropyPair pair = entropy_pair(w, 4.0 / 3.0, Dir::X);
  CHECK(pair.entropy == doctest::Approx(-3.0));
  CHECK(pair.flux == doctest::Approx(0.0));
}

TEST_CASE("entropy flux is entropy times velocity") {
  std::mt19937 rng(31);
  for (int i = 0; i < 200; ++i) {
    const FluidPrim w = random_prim(rng);
    const double gamma = 1.4;
    const EntropyPair px = entropy_pair(w, gamma, Dir::X);
    const EntropyPair py = entropy_pair(w, gamma, Dir::Y);
    CHECK(px.flux == doctest::Approx(px.entropy * w.u(0)).epsilon(1e-13));
    CHECK(py.flux == doctest::Approx(py.entropy * w.u(1)).epsilon(1e-13));
  }
}

TEST_CASE("entropy variable map inverts") {
  std::mt19937 rng(37);
  for (int i = 0; i < 2000; ++i) {
    const FluidPrim w = random_prim(rng, 0.98);
    const double gamma = 1.0 + 0.95 * ((i % 7) + 1) / 7.0;
    const FluidPrim back =
        entropy_variables_to_prim(entropy_variables(w, gamma), gamma);
    // The inverse goes through exp/pow, which amplifies roundoff by the
    // exponent 1/(1-gamma); allow for that amplification.
    CHECK(back.rho == doctest::Approx(w.rho).epsilon(1e-9));
    CHECK(back.p == doctest::Approx(w.p).epsilon(1e-9));
    CHECK((back.u - w.u).norm() < 1e-12 * (1.0 + w.u.norm()));
  }
}

TEST_CASE("potential closes the entropy triple product") {
  // psi^d = V . f^d - F^d ties the entropy variables, the physical flux,
  // the entropy flux and the potential together.
  std::mt19937 rng(41);
  for (int i = 0; i < 2000; ++i) {
    const FluidPrim w = random_prim(rng, 0.95);
    const double gamma = 5.0 / 3.0;
    for (Dir dir : {Dir::X, Dir::Y}) {
      const Vec5 v = entropy_variables(w, gamma);
      const Vec5 f = fluid_flux(w, gamma, dir);
      const EntropyPair pair = entropy_pair(w, gamma, dir);
      const double psi = entropy_potential(w, dir);
      const double lhs = v.dot(f) - pair.flux;
      // V.f and the entropy flux share large terms that cancel, so the
      // tolerance is anchored to the size of those terms.
      const double scale = v.norm() * f.norm() + std::abs(pair.flux) + 1.0;
      CHECK(std::abs(lhs - psi) <= 1e-13 * scale);
    }
  }
}

TEST_CASE("full state flux assembly") {
  PlasmaParams par;
  par.gamma_i = 5.0 / 3.0;
  par.gamma_e = 4.0 / 3.0;
  par.kappa = 2.0;
  par.chi = 1.5;
  PrimState w;
  w.ion = {1.0, Vec3(0.2, 0.1, 0.0), 0.5};
  w.ele = {0.1, Vec3(-0.1, 0.3, 0.2), 0.05};
  w.em << 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0;
  const Vec18 f = physical_flux(w, par, Dir::Y);
  CHECK((f.segment<5>(0) - fluid_flux(w.ion, par.gamma_i, Dir::Y)).norm() ==
        0.0);
  CHECK((f.segment<5>(5) - fluid_flux(w.ele, par.gamma_e, Dir::Y)).norm() ==
        0.0);
  CHECK((f.segment<8>(10) - maxwell_flux(w.em, 2.0, 1.5, Dir::Y)).norm() ==
        0.0);
}
