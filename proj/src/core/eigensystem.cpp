/// \file eigensystem.cpp
/// \brief Eigen decompositions of the fluid and electromagnetic blocks.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/eigensystem.hpp"

#include <cmath>

namespace rtfp {

namespace {

/// Shared intermediates of the direction-d fluid eigen decomposition.
struct WaveQuantities {
  double c = 0.0;      ///< sound speed
  double h = 0.0;      ///< specific enthalpy
  double gl = 0.0;     ///< Lorentz factor
  double usq = 0.0;    ///< |u|^2
  double un = 0.0;     ///< velocity component normal to the interface
  double q = 0.0;      ///< Q^d = 1 - u_d^2 - c^2 (perpendicular speed)^2
  double sqrt_q = 0.0;
};

WaveQuantities wave_quantities(const FluidPrim& w, double gamma, Dir dir) {
  WaveQuantities wq;
  wq.c = sound_speed(w.rho, w.p, gamma);
  wq.h = specific_enthalpy(w.rho, w.p, gamma);
  wq.gl = lorentz_factor(w.u);
  wq.usq = w.u.squaredNorm();
  const int d = static_cast<int>(dir);
  wq.un = w.u(d);
  wq.q = 1.0 - wq.un * wq.un - wq.c * wq.c * (wq.usq - wq.un * wq.un);
  wq.sqrt_q = std::sqrt(wq.q);
  return wq;
}

}  // namespace

Vec5 fluid_eigenvalues(const FluidPrim& w, double gamma, Dir dir) {
  const WaveQuantities wq = wave_quantities(w, gamma, dir);
  const double c2 = wq.c * wq.c;
  const double denom = 1.0 - c2 * wq.usq;
  const double acoustic = wq.c / wq.gl * wq.sqrt_q;
  Vec5 lam;
  lam(0) = ((1.0 - c2) * wq.un - acoustic) / denom;
  lam(1) = wq.un;
  lam(2) = wq.un;
  lam(3) = wq.un;
  lam(4) = ((1.0 - c2) * wq.un + acoustic) / denom;
  return lam;
}

double fluid_max_speed(const FluidPrim& w, double gamma, Dir dir) {
  const Vec5 lam = fluid_eigenvalues(w, gamma, dir);
  return std::max(std::abs(lam(0)), std::abs(lam(4)));
}

Mat5 prim_to_cons_jacobian(const FluidPrim& w, double gamma) {
  const double gl = lorentz_factor(w.u);
  const double h = specific_enthalpy(w.rho, w.p, gamma);
  const double k = gamma / (gamma - 1.0);
  const double gl2 = gl * gl;
  Mat5 jac;
  jac(0, 0) = gl;
  jac.block<1, 3>(0, 1) = (w.rho * gl2 * gl) * w.u.transpose();
  jac(0, 4) = 0.0;
  for (int j = 0; j < 3; ++j) {
    jac(1 + j, 0) = gl2 * w.u(j);
    for (int l = 0; l < 3; ++l) {
      const double delta = (j == l) ? 1.0 : 0.0;
      jac(1 + j, 1 + l) =
          w.rho * h * gl2 * (delta + 2.0 * gl2 * w.u(j) * w.u(l));
    }
    jac(1 + j, 4) = k * gl2 * w.u(j);
  }
  jac(4, 0) = gl2;
  jac.block<1, 3>(4, 1) = (2.0 * w.rho * h * gl2 * gl2) * w.u.transpose();
  jac(4, 4) = k * gl2 - 1.0;
  return jac;
}

Mat5 fluid_eigenvectors_prim(const FluidPrim& w, double gamma, Dir dir) {
  const WaveQuantities wq = wave_quantities(w, gamma, dir);
  const int d = static_cast<int>(dir);
  // Perpendicular in-block rows: for d = x the shear columns carry
  // (uy, uz); for d = y they carry (ux, uz).
  const int perp_a = (dir == Dir::X) ? 1 : 0;
  const int perp_b = 2;
  const double ua = w.u(perp_a);
  const double ub = w.u(perp_b);

  Mat5 r = Mat5::Zero();
  const double inv_c2h = 1.0 / (wq.c * wq.c * wq.h);
  r(0, 0) = inv_c2h;
  r(0, 1) = 1.0;
  r(0, 4) = inv_c2h;

  const double acoustic_row =
      wq.sqrt_q / (wq.c * wq.h * wq.gl * w.rho);
  r(1 + d, 0) = -acoustic_row;
  r(1 + d, 4) = acoustic_row;

  const double shear_denom =
      wq.c * wq.h * wq.gl * wq.gl * w.rho * (wq.un * wq.un - 1.0);
  const double left_factor = (wq.c - wq.gl * wq.sqrt_q * wq.un) / shear_denom;
  const double right_factor = (wq.c + wq.gl * wq.sqrt_q * wq.un) / shear_denom;
  r(1 + perp_a, 0) = left_factor * ua;
  r(1 + perp_a, 2) = 1.0;
  r(1 + perp_a, 4) = right_factor * ua;
  r(1 + perp_b, 0) = left_factor * ub;
  r(1 + perp_b, 3) = 1.0;
  r(1 + perp_b, 4) = right_factor * ub;

  r(4, 0) = 1.0;
  r(4, 4) = 1.0;
  return r;
}

Mat5 fluid_right_eigenvectors(const FluidPrim& w, double gamma, Dir dir) {
  return prim_to_cons_jacobian(w, gamma) *
         fluid_eigenvectors_prim(w, gamma, dir);
}

Mat5 barth_scaling(const FluidPrim& w, double gamma, Dir dir) {
  const WaveQuantities wq = wave_quantities(w, gamma, dir);
  const int perp_a = (dir == Dir::X) ? 1 : 0;
  const int perp_b = 2;
  const double ua = w.u(perp_a);
  const double ub = w.u(perp_b);
  const double c2 = wq.c * wq.c;

  Mat5 t = Mat5::Zero();
  const double acoustic_base =
      c2 * wq.h * w.p / (2.0 * wq.gl * (1.0 - c2 * wq.usq));
  const double tilt = wq.c * wq.un / (wq.gl * wq.sqrt_q);
  t(0, 0) = std::sqrt(acoustic_base * (1.0 + tilt));
  t(4, 4) = std::sqrt(acoustic_base * (1.0 - tilt));
  t(1, 1) = std::sqrt(w.rho / wq.gl * (gamma - 1.0) / gamma);

  const double one_minus_un2 = 1.0 - wq.un * wq.un;
  const double shear_c =
      w.p / (wq.h * wq.gl * wq.gl * wq.gl * w.rho * w.rho * one_minus_un2);
  if (ua == 0.0 && ub == 0.0) {
    t(2, 2) = std::sqrt(shear_c * one_minus_un2);
    t(3, 3) = std::sqrt(shear_c * one_minus_un2);
  } else {
    const double perp2 = ua * ua + ub * ub;
    const double root = std::sqrt(one_minus_un2);
    const double sqrt_c = std::sqrt(shear_c);
    t(2, 2) = sqrt_c * (ub * ub * root + ua * ua / wq.gl) / perp2;
    t(3, 3) = sqrt_c * (ua * ua * root + ub * ub / wq.gl) / perp2;
    t(2, 3) = sqrt_c * ua * ub * (1.0 / wq.gl - root) / perp2;
    t(3, 2) = t(2, 3);
  }
  return t;
}

Mat5 scaled_eigenvectors(const FluidPrim& w, double gamma, Dir dir) {
  return fluid_right_eigenvectors(w, gamma, dir) *
         barth_scaling(w, gamma, dir);
}

Vec8 maxwell_eigenvalues(double kappa, double chi) {
  Vec8 lam;
  lam << -chi, -kappa, -1.0, -1.0, 1.0, 1.0, kappa, chi;
  return lam;
}

Mat8 maxwell_eigenvectors(Dir dir) {
  Mat8 r;
  if (dir == Dir::X) {
    r << 0, -1, 0, 0, 0, 0, 1, 0,   // Bx
         0, 0, 0, 1, 0, -1, 0, 0,   // By
         0, 0, -1, 0, 1, 0, 0, 0,   // Bz
         -1, 0, 0, 0, 0, 0, 0, 1,   // Ex
         0, 0, 1, 0, 1, 0, 0, 0,    // Ey
         0, 0, 0, 1, 0, 1, 0, 0,    // Ez
         1, 0, 0, 0, 0, 0, 0, 1,    // phi
         0, 1, 0, 0, 0, 0, 1, 0;    // psi
  } else {
    r << 0, 0, 0, -1, 0, 1, 0, 0,   // Bx
         0, -1, 0, 0, 0, 0, 1, 0,   // By
         0, 0, 1, 0, -1, 0, 0, 0,   // Bz
         0, 0, 1, 0, 1, 0, 0, 0,    // Ex
         -1, 0, 0, 0, 0, 0, 0, 1,   // Ey
         0, 0, 0, 1, 0, 1, 0, 0,    // Ez
         1, 0, 0, 0, 0, 0, 0, 1,    // phi
         0, 1, 0, 0, 0, 0, 1, 0;    // psi
  }
  return r;
}

}  // namespace rtfp
