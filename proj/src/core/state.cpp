/// \file state.cpp
/// \brief Primitive/conserved conversions for the relativistic ideal fluid.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/state.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace rtfp {

bool fluid_admissible(const FluidPrim& w) {
  return std::isfinite(w.rho) && std::isfinite(w.p) && w.u.allFinite() &&
         w.rho > 0.0 && w.p > 0.0 && w.u.squaredNorm() < 1.0;
}

Vec5 fluid_prim_to_cons(const FluidPrim& w, double gamma) {
  const double gl = lorentz_factor(w.u);
  const double h = specific_enthalpy(w.rho, w.p, gamma);
  const double rho_h_gl2 = w.rho * h * gl * gl;
  Vec5 q;
  q(comp::D) = gl * w.rho;
  q.segment<3>(comp::Mx) = rho_h_gl2 * w.u;
  q(comp::En) = rho_h_gl2 - w.p;
  return q;
}

namespace {

/// Residual g(p) and derivative dg/dp of the pressure equation at fixed
/// conserved variables (D, |M|, E).
struct PressureResidual {
  double g = 0.0;
  double dg = 1.0;
  bool valid = false;
};

PressureResidual pressure_residual(double p, double dens, double mom_mag,
                                   double en, double gamma) {
  PressureResidual r;
  const double v = mom_mag / (en + p);
  if (!(v < 1.0) || !std::isfinite(v)) {
    return r;
  }
  const double gl = 1.0 / std::sqrt(1.0 - v * v);
  const double rho = dens / gl;
  const double h = (en + p) / (dens * gl);
  const double gm1_over_g = (gamma - 1.0) / gamma;
  r.g = p - gm1_over_g * rho * (h - 1.0);

  // dv/dp = -v/(E+p); propagate through gl, rho and h.
  const double dv = -v / (en + p);
  const double dgl = gl * gl * gl * v * dv;
  const double drho = -dens / (gl * gl) * dgl;
  const double dh = 1.0 / (dens * gl) - (en + p) / (dens * gl * gl) * dgl;
  r.dg = 1.0 - gm1_over_g * (drho * (h - 1.0) + rho * dh);
  r.valid = true;
  return r;
}

}  // namespace

RecoveryResult fluid_cons_to_prim(const Vec5& q, double gamma,
                                  const SolveControls& ctl, double p_guess) {
  RecoveryResult out;
  const double dens = q(comp::D);
  const Vec3 mom = q.segment<3>(comp::Mx);
  const double en = q(comp::En);
  if (!q.allFinite() || !(dens > 0.0) || !(en > 0.0)) {
    return out;
  }
  const double mom_mag = mom.norm();

  // Bracket the root: g < 0 at the pressure floor for any admissible state
  // and g > 0 at p = E, since v < 1 there forces the thermal term below p.
  double lo = ctl.pressure_floor;
  double hi = en;
  const PressureResidual at_lo =
      pressure_residual(lo, dens, mom_mag, en, gamma);
  const PressureResidual at_hi =
      pressure_residual(hi, dens, mom_mag, en, gamma);
  if (!at_lo.valid || !at_hi.valid || at_lo.g > 0.0 || at_hi.g < 0.0) {
    return out;
  }

  double p = (p_guess > lo && p_guess < hi)
                 ? p_guess
                 : std::min(hi, std::max(lo, (gamma - 1.0) *
                                                 (en - std::hypot(dens,
                                                                  mom_mag))));
  // The residual is built from differences of quantities of size E + D, so
  // its absolute roundoff floor scales with them. Below that floor the data
  // cannot pin the pressure any further and the iteration must stop.
  const double eps = std::numeric_limits<double>::epsilon();
  const double noise = 4.0 * eps * (en + dens);
  for (int it = 1; it <= ctl.recovery_max_iter; ++it) {
    out.iterations = it;
    if (hi - lo <= 4.0 * eps * hi) {
      p = 0.5 * (lo + hi);
      out.converged = true;
      break;
    }
    const PressureResidual r = pressure_residual(p, dens, mom_mag, en, gamma);
    if (!r.valid) {
      p = 0.5 * (lo + hi);
      continue;
    }
    if (r.g > 0.0) {
      hi = p;
    } else {
      lo = p;
    }
    const double step = r.g / r.dg;
    const double tol_abs =
        ctl.recovery_tol * std::max(p, ctl.pressure_floor) + noise;
    // Declare convergence on the raw Newton step before any bracket
    // clamping, so an iterate sitting on the root cannot be bounced to the
    // bracket midpoint by the collision check below.
    if (std::isfinite(step) && std::abs(step) <= tol_abs) {
      out.converged = true;
      break;
    }
    double p_next = p - step;
    if (!(std::isfinite(p_next)) || p_next <= lo || p_next >= hi) {
      p_next = 0.5 * (lo + hi);
    }
    const double dp = std::abs(p_next - p);
    p = p_next;
    if (dp <= tol_abs) {
      out.converged = true;
      break;
    }
  }
  if (!out.converged) {
    return out;
  }

  const Vec3 u = mom / (en + p);
  const double gl = lorentz_factor(u);
  out.prim.rho = dens / gl;
  out.prim.u = u;
  out.prim.p = p;
  out.converged = fluid_admissible(out.prim);
  return out;
}

Vec18 prim_to_cons(const PrimState& w, const PlasmaParams& par) {
  Vec18 q;
  q.segment<kFluidComp>(comp::kIonOffset) =
      fluid_prim_to_cons(w.ion, par.gamma_i);
  q.segment<kFluidComp>(comp::kEleOffset) =
      fluid_prim_to_cons(w.ele, par.gamma_e);
  q.segment<kEmComp>(comp::kEmOffset) = w.em;
  return q;
}

PrimState cons_to_prim(const Vec18& q, const PlasmaParams& par,
                       const SolveControls& ctl) {
  PrimState w;
  const RecoveryResult ion = fluid_cons_to_prim(
      q.segment<kFluidComp>(comp::kIonOffset), par.gamma_i, ctl);
  const RecoveryResult ele = fluid_cons_to_prim(
      q.segment<kFluidComp>(comp::kEleOffset), par.gamma_e, ctl);
  if (!ion.converged || !ele.converged) {
    throw_error(ErrorCode::RecoveryFailure,
                "primitive recovery failed for species " +
                    std::string(!ion.converged ? "ion" : "electron"));
  }
  w.ion = ion.prim;
  w.ele = ele.prim;
  w.em = q.segment<kEmComp>(comp::kEmOffset);
  return w;
}

bool is_admissible(const Vec18& q, const PlasmaParams& par,
                   const SolveControls& ctl) {
  if (!q.allFinite()) {
    return false;
  }
  const RecoveryResult ion = fluid_cons_to_prim(
      q.segment<kFluidComp>(comp::kIonOffset), par.gamma_i, ctl);
  const RecoveryResult ele = fluid_cons_to_prim(
      q.segment<kFluidComp>(comp::kEleOffset), par.gamma_e, ctl);
  return ion.converged && ele.converged;
}

}  // namespace rtfp
