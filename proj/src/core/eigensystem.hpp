/// \file eigensystem.hpp
/// \brief Eigenvalues, right eigenvectors and entropy-scaled eigenvectors
///        of the fluid and electromagnetic flux Jacobians.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include "core/defs.hpp"
#include "core/params.hpp"
#include "core/state.hpp"

namespace rtfp {

/// Fluid eigenvalues in direction d, ordered to match the eigenvector
/// columns: (lambda-, u_d, u_d, u_d, lambda+) with
/// lambda+- = ((1 - c^2) u_d +- (c/Gamma) sqrt(Q^d)) / (1 - c^2 |u|^2).
Vec5 fluid_eigenvalues(const FluidPrim& w, double gamma, Dir dir);

/// Largest absolute fluid wave speed in direction d.
double fluid_max_speed(const FluidPrim& w, double gamma, Dir dir);

/// Jacobian dU/dW of the conserved variables with respect to the
/// primitives W = (rho, ux, uy, uz, p).
Mat5 prim_to_cons_jacobian(const FluidPrim& w, double gamma);

/// Right eigenvector matrix of the quasilinear primitive-variable form.
/// Columns follow the eigenvalue order of fluid_eigenvalues.
Mat5 fluid_eigenvectors_prim(const FluidPrim& w, double gamma, Dir dir);

/// Right eigenvectors of the conserved-variable flux Jacobian:
/// R = (dU/dW) R_W.
Mat5 fluid_right_eigenvectors(const FluidPrim& w, double gamma, Dir dir);

/// Symmetric positive definite scaling T with T^2 = Y such that
/// (R T)(R T)^T equals the entropy Jacobian dU/dV.
Mat5 barth_scaling(const FluidPrim& w, double gamma, Dir dir);

/// Entropy-scaled right eigenvectors R~ = R T.
Mat5 scaled_eigenvectors(const FluidPrim& w, double gamma, Dir dir);

/// Eigenvalues of the electromagnetic block:
/// (-chi, -kappa, -1, -1, 1, 1, kappa, chi).
Vec8 maxwell_eigenvalues(double kappa, double chi);

/// Right eigenvectors of the electromagnetic flux Jacobian, columns ordered
/// to match maxwell_eigenvalues. The cleaning waves couple (normal E, phi)
/// and (normal B, psi) pairwise, so the same constant matrix serves every
/// positive kappa and chi.
Mat8 maxwell_eigenvectors(Dir dir);

}  // namespace rtfp
