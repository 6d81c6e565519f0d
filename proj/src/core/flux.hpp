/// \file flux.hpp
/// \brief Physical fluxes, source terms and the entropy pair of the
///        two-fluid plasma system.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include "core/defs.hpp"
#include "core/params.hpp"
#include "core/state.hpp"

namespace rtfp {

/// Advective flux of one fluid species in direction d:
/// (D u_d, M u_d + p e_d, M_d).
Vec5 fluid_flux(const FluidPrim& w, double gamma, Dir dir);

/// Linear flux of the perfectly hyperbolic Maxwell block in direction d.
/// Component order is (Bx, By, Bz, Ex, Ey, Ez, phi, psi).
Vec8 maxwell_flux(const Vec8& em, double kappa, double chi, Dir dir);

/// Full 18-component physical flux in direction d.
Vec18 physical_flux(const PrimState& w, const PlasmaParams& par, Dir dir);

/// Lorentz force acting on one species with charge-to-mass ratio r:
/// (0, r D (E + u x B), r D (u . E)) with D = Gamma rho.
Vec5 lorentz_source(const FluidPrim& w, const Vec8& em, double r);

/// Source of the Maxwell block: current density in the E rows and scaled
/// charge density in the phi row, both multiplied by par.source_scale.
Vec8 maxwell_source(const FluidPrim& ion, const FluidPrim& ele,
                    const PlasmaParams& par);

/// Inter-species friction (momentum and energy rows of the ion block).
/// The electron block is the exact negation. Returns zero when eta == 0.
Vec5 resistive_source(const FluidPrim& ion, const FluidPrim& ele,
                      const PlasmaParams& par);

/// Assembles all source terms of the 18-component system.
Vec18 combined_source(const PrimState& w, const PlasmaParams& par);

/// Entropy pair of one species: scalar entropy U = -rho Gamma s/(gamma-1)
/// with s = ln(p rho^-gamma), and entropy flux F^d = U u_d.
struct EntropyPair {
  double entropy = 0.0;
  double flux = 0.0;
};
EntropyPair entropy_pair(const FluidPrim& w, double gamma, Dir dir);

/// Scalar entropy density of one species (the U of entropy_pair).
double entropy_density(const FluidPrim& w, double gamma);

/// Entropy variables V = dU/dq of one species.
Vec5 entropy_variables(const FluidPrim& w, double gamma);

/// Inverse of entropy_variables. Used to cross-check the mapping and by
/// tests that need primitives at perturbed entropy-variable states.
FluidPrim entropy_variables_to_prim(const Vec5& v, double gamma);

/// Entropy flux potential psi^d = rho Gamma u_d = V . f^d - F^d.
double entropy_potential(const FluidPrim& w, Dir dir);

}  // namespace rtfp
