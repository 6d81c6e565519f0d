/// \file flux.cpp
/// \brief Physical fluxes, source terms and the entropy pair.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/flux.hpp"

#include <cmath>

namespace rtfp {

Vec5 fluid_flux(const FluidPrim& w, double gamma, Dir dir) {
  const Vec5 q = fluid_prim_to_cons(w, gamma);
  const int d = static_cast<int>(dir);
  const double ud = w.u(d);
  Vec5 f;
  f(comp::D) = q(comp::D) * ud;
  f.segment<3>(comp::Mx) = q.segment<3>(comp::Mx) * ud;
  f(comp::Mx + d) += w.p;
  f(comp::En) = q(comp::Mx + d);
  return f;
}

Vec8 maxwell_flux(const Vec8& em, double kappa, double chi, Dir dir) {
  namespace c = comp;
  Vec8 f;
  if (dir == Dir::X) {
    f(c::Bx) = kappa * em(c::Psi);
    f(c::By) = -em(c::Ez);
    f(c::Bz) = em(c::Ey);
    f(c::Ex) = chi * em(c::Phi);
    f(c::Ey) = em(c::Bz);
    f(c::Ez) = -em(c::By);
    f(c::Phi) = chi * em(c::Ex);
    f(c::Psi) = kappa * em(c::Bx);
  } else {
    f(c::Bx) = em(c::Ez);
    f(c::By) = kappa * em(c::Psi);
    f(c::Bz) = -em(c::Ex);
    f(c::Ex) = -em(c::Bz);
    f(c::Ey) = chi * em(c::Phi);
    f(c::Ez) = em(c::Bx);
    f(c::Phi) = chi * em(c::Ey);
    f(c::Psi) = kappa * em(c::By);
  }
  return f;
}

Vec18 physical_flux(const PrimState& w, const PlasmaParams& par, Dir dir) {
  Vec18 f;
  f.segment<kFluidComp>(comp::kIonOffset) =
      fluid_flux(w.ion, par.gamma_i, dir);
  f.segment<kFluidComp>(comp::kEleOffset) =
      fluid_flux(w.ele, par.gamma_e, dir);
  f.segment<kEmComp>(comp::kEmOffset) =
      maxwell_flux(w.em, par.kappa, par.chi, dir);
  return f;
}

Vec5 lorentz_source(const FluidPrim& w, const Vec8& em, double r) {
  const Vec3 e_field = em.segment<3>(comp::Ex);
  const Vec3 b_field = em.segment<3>(comp::Bx);
  const double dens = lorentz_factor(w.u) * w.rho;
  Vec5 s;
  s(comp::D) = 0.0;
  s.segment<3>(comp::Mx) = r * dens * (e_field + w.u.cross(b_field));
  s(comp::En) = r * dens * w.u.dot(e_field);
  return s;
}

namespace {

/// Current density j = sum_a r_a D_a u_a (without the source scale).
Vec3 current_density(const FluidPrim& ion, const FluidPrim& ele,
                     const PlasmaParams& par) {
  return par.r_i * lorentz_factor(ion.u) * ion.rho * ion.u +
         par.r_e * lorentz_factor(ele.u) * ele.rho * ele.u;
}

/// Charge density rho_c = sum_a r_a D_a (without the source scale).
double charge_density(const FluidPrim& ion, const FluidPrim& ele,
                      const PlasmaParams& par) {
  return par.r_i * lorentz_factor(ion.u) * ion.rho +
         par.r_e * lorentz_factor(ele.u) * ele.rho;
}

}  // namespace

Vec8 maxwell_source(const FluidPrim& ion, const FluidPrim& ele,
                    const PlasmaParams& par) {
  Vec8 s = Vec8::Zero();
  s.segment<3>(comp::Ex) =
      -par.source_scale * current_density(ion, ele, par);
  s(comp::Phi) = par.source_scale * par.chi * charge_density(ion, ele, par);
  return s;
}

Vec5 resistive_source(const FluidPrim& ion, const FluidPrim& ele,
                      const PlasmaParams& par) {
  Vec5 s = Vec5::Zero();
  if (par.eta == 0.0) {
    return s;
  }
  const double gl_i = lorentz_factor(ion.u);
  const double gl_e = lorentz_factor(ele.u);
  // The plasma frequency inherits the source scale so that friction and
  // electromagnetic sources use one consistent unit convention.
  const double omega2 =
      par.source_scale *
      (par.r_i * par.r_i * ion.rho + par.r_e * par.r_e * ele.rho);
  const Vec3 j = current_density(ion, ele, par);
  const double rho_c = charge_density(ion, ele, par);
  const Vec3 drift = j / omega2;
  const double lam = par.source_scale *
                     (par.r_i * par.r_i * ion.rho * gl_i +
                      par.r_e * par.r_e * ele.rho * gl_e) /
                     omega2;
  const double rho0 = lam * rho_c - j.dot(drift);
  const double coeff = -par.eta * omega2 / (par.r_i - par.r_e);
  s.segment<3>(comp::Mx) = coeff * (j - rho0 * drift);
  s(comp::En) = coeff * (rho_c - rho0 * lam);
  return s;
}

Vec18 combined_source(const PrimState& w, const PlasmaParams& par) {
  Vec18 s;
  s.segment<kFluidComp>(comp::kIonOffset) =
      lorentz_source(w.ion, w.em, par.r_i);
  s.segment<kFluidComp>(comp::kEleOffset) =
      lorentz_source(w.ele, w.em, par.r_e);
  const Vec5 friction = resistive_source(w.ion, w.ele, par);
  s.segment<kFluidComp>(comp::kIonOffset) += friction;
  s.segment<kFluidComp>(comp::kEleOffset) -= friction;
  s.segment<kEmComp>(comp::kEmOffset) = maxwell_source(w.ion, w.ele, par);
  return s;
}

double entropy_density(const FluidPrim& w, double gamma) {
  const double s = std::log(w.p) - gamma * std::log(w.rho);
  return -w.rho * lorentz_factor(w.u) * s / (gamma - 1.0);
}

EntropyPair entropy_pair(const FluidPrim& w, double gamma, Dir dir) {
  EntropyPair pair;
  pair.entropy = entropy_density(w, gamma);
  pair.flux = pair.entropy * w.u(static_cast<int>(dir));
  return pair;
}

Vec5 entropy_variables(const FluidPrim& w, double gamma) {
  const double s = std::log(w.p) - gamma * std::log(w.rho);
  const double beta = w.rho / w.p;
  const double gl = lorentz_factor(w.u);
  Vec5 v;
  v(0) = (gamma - s) / (gamma - 1.0) + beta;
  v.segment<3>(1) = gl * beta * w.u;
  v(4) = -gl * beta;
  return v;
}

FluidPrim entropy_variables_to_prim(const Vec5& v, double gamma) {
  FluidPrim w;
  w.u = -v.segment<3>(1) / v(4);
  const double gl = lorentz_factor(w.u);
  const double beta = -v(4) / gl;
  const double s = gamma - (gamma - 1.0) * (v(0) - beta);
  w.rho = std::pow(beta * std::exp(s), 1.0 / (1.0 - gamma));
  w.p = w.rho / beta;
  return w;
}

double entropy_potential(const FluidPrim& w, Dir dir) {
  return w.rho * lorentz_factor(w.u) * w.u(static_cast<int>(dir));
}

}  // namespace rtfp
