/// \file ec_flux.cpp
/// \brief Entropy-conservative fluid fluxes.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/ec_flux.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace rtfp {

double log_mean(double a, double b) {
  const double zeta = a / b;
  const double f = (zeta - 1.0) / (zeta + 1.0);
  const double u = f * f;
  double big_f;
  if (u < 1e-4) {
    big_f = 1.0 + u / 3.0 + u * u / 5.0 + u * u * u / 7.0;
  } else {
    big_f = std::log(zeta) / (2.0 * f);
  }
  return (a + b) / (2.0 * big_f);
}

Vec5 ec_flux_fluid(const FluidPrim& wl, const FluidPrim& wr, double gamma,
                   Dir dir) {
  const double gl_l = lorentz_factor(wl.u);
  const double gl_r = lorentz_factor(wr.u);
  const Vec3 m_l = gl_l * wl.u;
  const Vec3 m_r = gl_r * wr.u;
  const double beta_l = wl.rho / wl.p;
  const double beta_r = wr.rho / wr.p;

  const double rho_ln = log_mean(wl.rho, wr.rho);
  const double beta_ln = log_mean(beta_l, beta_r);
  const double rho_bar = 0.5 * (wl.rho + wr.rho);
  const double beta_bar = 0.5 * (beta_l + beta_r);
  const Vec3 m_bar = 0.5 * (m_l + m_r);
  const double gl_bar = 0.5 * (gl_l + gl_r);

  const int d = static_cast<int>(dir);
  const double m_n = m_bar(d);
  const double k = 1.0 / ((gamma - 1.0) * beta_ln) + 1.0;
  const double p_bar = rho_bar / beta_bar;
  const double denom = m_bar.squaredNorm() - gl_bar * gl_bar;

  Vec5 f;
  f(comp::D) = rho_ln * m_n;
  f(comp::En) = -gl_bar * (k * rho_ln * m_n + m_n * p_bar) / denom;
  f.segment<3>(comp::Mx) = (m_bar / gl_bar) * f(comp::En);
  f(comp::Mx + d) += p_bar;
  return f;
}

double ec_combination_weight(int p, int r) {
  static constexpr double kWeights[3][3] = {
      {1.0, 0.0, 0.0},
      {4.0 / 3.0, -1.0 / 6.0, 0.0},
      {3.0 / 2.0, -3.0 / 10.0, 1.0 / 30.0},
  };
  if (p < 1 || p > 3 || r < 1 || r > p) {
    throw_error(ErrorCode::InvalidArgument,
                "combination weight defined for 1 <= r <= p <= 3");
  }
  return kWeights[p - 1][r - 1];
}

Vec5 ec_flux_high_order(std::span<const FluidPrim> window, double gamma,
                        Dir dir, int p) {
  if (static_cast<int>(window.size()) != 2 * p) {
    throw_error(ErrorCode::InvalidArgument,
                "high-order flux window must hold 2p cells");
  }
  Vec5 f = Vec5::Zero();
  for (int r = 1; r <= p; ++r) {
    Vec5 sum = Vec5::Zero();
    for (int s = 0; s < r; ++s) {
      sum += ec_flux_fluid(window[p - 1 - s], window[p - 1 - s + r], gamma,
                           dir);
    }
    f += ec_combination_weight(p, r) * sum;
  }
  return f;
}

}  // namespace rtfp
