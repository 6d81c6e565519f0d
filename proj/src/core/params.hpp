/// \file params.hpp
/// \brief Physical parameters of the two-fluid plasma model and numerical
///        tolerances shared across the solver.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include "core/defs.hpp"
#include "core/errors.hpp"

namespace rtfp {

/// Physical parameters of the two-fluid model. Charge-to-mass ratios carry
/// their sign (electrons are negative). kappa and chi are the propagation
/// speeds of the divergence-cleaning waves for B and E respectively.
/// source_scale multiplies the current and charge density in the
/// electromagnetic source term (1 for nondimensional setups, 4*pi for
/// Gaussian-unit setups).
struct PlasmaParams {
  double gamma_i = 5.0 / 3.0;  ///< ion adiabatic index, in (1, 2]
  double gamma_e = 5.0 / 3.0;  ///< electron adiabatic index, in (1, 2]
  double r_i = 1.0;            ///< ion charge-to-mass ratio
  double r_e = -1.0;           ///< electron charge-to-mass ratio
  double kappa = 1.0;          ///< cleaning speed for magnetic divergence
  double chi = 1.0;            ///< cleaning speed for electric divergence
  double eta = 0.0;            ///< resistivity (0 disables friction)
  double source_scale = 1.0;   ///< scale on current and charge density

  double gamma(Species s) const {
    return s == Species::Ion ? gamma_i : gamma_e;
  }
  double charge_ratio(Species s) const {
    return s == Species::Ion ? r_i : r_e;
  }

  /// Throws ErrorCode::InvalidArgument when a parameter is out of range.
  void validate() const {
    if (!(gamma_i > 1.0 && gamma_i <= 2.0) ||
        !(gamma_e > 1.0 && gamma_e <= 2.0)) {
      throw_error(ErrorCode::InvalidArgument,
                  "adiabatic index must lie in (1, 2]");
    }
    if (!(kappa > 0.0) || !(chi > 0.0)) {
      throw_error(ErrorCode::InvalidArgument,
                  "divergence-cleaning speeds must be positive");
    }
    if (eta < 0.0) {
      throw_error(ErrorCode::InvalidArgument, "resistivity must be >= 0");
    }
    if (!(source_scale > 0.0)) {
      throw_error(ErrorCode::InvalidArgument, "source scale must be positive");
    }
    if (r_i == r_e) {
      throw_error(ErrorCode::InvalidArgument,
                  "charge-to-mass ratios must differ between species");
    }
  }
};

/// Iteration controls for the nonlinear solves. Defaults are the tolerances
/// used throughout the test suite.
struct SolveControls {
  double recovery_tol = 1e-12;    ///< relative tolerance, primitive recovery
  int recovery_max_iter = 100;    ///< iteration cap, primitive recovery
  double pressure_floor = 1e-14;  ///< lower bracket for recovered pressure
  double newton_tol = 1e-12;      ///< relative tolerance, implicit stages
  int newton_max_iter = 50;       ///< iteration cap, implicit stages
  double armijo_c = 1e-4;         ///< sufficient-decrease constant
  double newton_min_step = 1e-10; ///< smallest line-search fraction
};

}  // namespace rtfp
