/// \file es_flux.hpp
/// \brief Entropy-stable interface fluxes: scaled Rusanov diffusion on top
///        of the high-order entropy-conservative fluid flux, and the
///        Rusanov flux for the corrected Maxwell block.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <span>

#include "core/defs.hpp"

namespace rtfp {

/// Rusanov-type interface diffusion operator D = R~ (lambda_max I) R~^T.
/// Storing the factor keeps the application to scaled-variable jumps cheap
/// and exactly symmetric positive semi-definite.
struct DiffusionOperator {
  Mat5 rt;            ///< scaled eigenvectors at the interface state
  double lambda_max;  ///< largest wave speed magnitude near the interface

  /// Assembled diffusion matrix R~ (lambda_max I) R~^T.
  Mat5 matrix() const { return lambda_max * (rt * rt.transpose()); }
};

/// Arithmetic average of the primitive variables, validated as a state.
FluidPrim interface_state(const FluidPrim& left, const FluidPrim& right);

/// Diffusion operator for the interface between two states: scaled
/// eigenvectors at the averaged state, scalar dissipation speed equal to
/// the largest eigenvalue magnitude over left, right and averaged states.
DiffusionOperator diffusion_matrix(Dir dir, const FluidPrim& left,
                                   const FluidPrim& right, double gamma);

/// Entropy-conservative interior order 2p used with an order-k interface
/// reconstruction: p = k/2 for even k, (k+1)/2 for odd k.
int ec_order_for(int k);

/// Entropy-stable fluid flux of reconstruction order k on a stencil of 2k
/// cells (the interface sits between stencil[k-1] and stencil[k]): the
/// order-2p entropy-conservative flux minus half the scaled Rusanov
/// diffusion applied to the reconstructed jump of scaled entropy variables.
/// k = 1 degenerates to the two-point flux with the raw jump.
Vec5 es_fluid_flux(Dir dir, int k, std::span<const FluidPrim> stencil,
                   double gamma);

/// Rusanov flux for the corrected Maxwell block on a stencil of 2k cells
/// with componentwise face reconstruction: min-mod for k = 2, WENO3 for
/// k = 3, WENO5 for k = 4 (k = 1 uses the cell values). The dissipation
/// speed is max(1, kappa, chi) unless literal_unit_speed fixes it at one.
Vec8 rusanov_maxwell_flux(Dir dir, int k, std::span<const Vec8> stencil,
                          double kappa, double chi,
                          bool literal_unit_speed = false);

}  // namespace rtfp
