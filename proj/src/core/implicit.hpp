/// \file implicit.hpp
/// \brief Per-cell Newton solve of the implicit source stage
///        U = known + coeff * s(U), with the analytic source Jacobian.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include "core/defs.hpp"
#include "core/params.hpp"
#include "core/state.hpp"

namespace rtfp {

using Mat18 = Eigen::Matrix<double, kNumComp, kNumComp>;

/// Jacobian of the combined source with respect to the primitive
/// coordinates (rho, u, p per species, then the electromagnetic block).
/// Pressure, potential and magnetic columns are zero because the source
/// never reads them.
Mat18 source_jacobian_prim(const PrimState& w, const PlasmaParams& par);

/// Jacobian of the combined source with respect to the conserved state,
/// chained through the primitive recovery.
Mat18 source_jacobian(const PrimState& w, const PlasmaParams& par);

/// One cell's implicit stage equation U = known + coeff * s(U).
struct ImplicitCellProblem {
  Vec18 known = Vec18::Zero();
  double coeff = 0.0;
  PlasmaParams params;
  /// Optional warm start (size 18); unknown components start from it
  /// instead of the known vector, with the known vector as fallback.
  Eigen::VectorXd guess;
  /// Diagnostic mode: treat the fluid blocks as fixed data and solve only
  /// the electric-field and potential rows; the stage equation is then
  /// linear and one Newton step lands exactly.
  bool freeze_fluids = false;
};

struct ImplicitSolveResult {
  Vec18 u = Vec18::Zero();
  int iterations = 0;
};

/// Solves the stage equation by Newton iteration with a backtracking line
/// search. Conserved density, magnetic field and the magnetic potential
/// have no source row and stay at the known values. Throws
/// ErrorCode::NewtonFailure when the iteration budget is exhausted and
/// ErrorCode::RecoveryFailure when no admissible starting point exists.
ImplicitSolveResult implicit_cell_solve(const ImplicitCellProblem& prob,
                                        const SolveControls& ctl = {});

}  // namespace rtfp
