/// \file state.hpp
/// \brief Thermodynamics of the ideal-gas relativistic fluid and conversion
///        between primitive and conserved variables.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include "core/defs.hpp"
#include "core/params.hpp"

namespace rtfp {

/// Lorentz factor 1/sqrt(1 - |u|^2). Requires |u| < 1.
inline double lorentz_factor(const Vec3& u) {
  return 1.0 / std::sqrt(1.0 - u.squaredNorm());
}

/// Specific enthalpy h = 1 + gamma/(gamma-1) * p/rho of an ideal gas.
inline double specific_enthalpy(double rho, double p, double gamma) {
  return 1.0 + gamma / (gamma - 1.0) * p / rho;
}

/// Relativistic sound speed: c^2 = k*p / (n*rho*h) with k = gamma/(gamma-1)
/// and n = k - 1.
inline double sound_speed(double rho, double p, double gamma) {
  const double k = gamma / (gamma - 1.0);
  const double n = k - 1.0;
  const double h = specific_enthalpy(rho, p, gamma);
  return std::sqrt(k * p / (n * rho * h));
}

/// True when the primitive state lies in the physical set:
/// rho > 0, p > 0, |u| < 1, all components finite.
bool fluid_admissible(const FluidPrim& w);

/// Conserved fluid variables (D, Mx, My, Mz, E) from primitives.
Vec5 fluid_prim_to_cons(const FluidPrim& w, double gamma);

/// Outcome of a primitive recovery.
struct RecoveryResult {
  FluidPrim prim;
  bool converged = false;
  int iterations = 0;
};

/// Recovers primitives from conserved fluid variables by a safeguarded
/// Newton iteration on the pressure. The residual
///   g(p) = p - (gamma-1)/gamma * rho(p) * (h(p) - 1)
/// is evaluated through v = |M|/(E + p); the iteration keeps a sign-change
/// bracket and falls back to bisection whenever a Newton step leaves it.
/// A positive p_guess warm-starts the iteration.
RecoveryResult fluid_cons_to_prim(const Vec5& q, double gamma,
                                  const SolveControls& ctl = {},
                                  double p_guess = -1.0);

/// Primitive description of the full two-fluid state. The electromagnetic
/// block is identical in primitive and conserved form.
struct PrimState {
  FluidPrim ion;
  FluidPrim ele;
  Vec8 em = Vec8::Zero();
};

/// Assembles the 18-component conserved state from primitives.
Vec18 prim_to_cons(const PrimState& w, const PlasmaParams& par);

/// Recovers both fluid blocks of the full state. Throws
/// ErrorCode::RecoveryFailure when either species fails to converge.
PrimState cons_to_prim(const Vec18& q, const PlasmaParams& par,
                       const SolveControls& ctl = {});

/// True when both fluid blocks recover to admissible primitives and the
/// electromagnetic block is finite.
bool is_admissible(const Vec18& q, const PlasmaParams& par,
                   const SolveControls& ctl = {});

}  // namespace rtfp
