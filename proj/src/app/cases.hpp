/// \file cases.hpp
/// \brief Catalog of the benchmark configurations shipped with the solver.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core/grid.hpp"
#include "core/params.hpp"
#include "core/solver.hpp"

namespace rtfp::app {

/// Pointwise primitive initializer. Receives the resolved physical
/// parameters so profiles that depend on them (for example a drift
/// velocity proportional to 1/r_i) follow any overrides.
using InitFn =
    std::function<PrimState(double x, double y, const PlasmaParams&)>;

/// Pointwise scalar reference solution, where the case has one.
using ReferenceFn = std::function<double(double x, double y, double t)>;

/// One benchmark configuration: domain, boundary conditions, physical
/// parameters, initial data, and recommended scheme settings. Grid
/// resolution and every numerical choice can be overridden per run; the
/// domain, boundaries, and initial profile define the case itself.
struct CaseDefinition {
  std::string name;
  std::string summary;
  GridSpec grid;  ///< desk-scale default resolution (ghost set at resolve)
  BoundarySet bc;
  PlasmaParams params;
  InitFn initializer;
  bool forced = false;  ///< attach the traveling-wave forcing term
  SchemeConfig scheme;
  TimeConfig time;
  double t_start = 0.0;
  double t_end = 0.0;
  double sample_interval = 0.0;
  bool track_psi = false;
  double psi_b0 = 1.0;
  ReferenceFn reference_rho_i;  ///< exact ion density (accuracy case)
  ReferenceFn reference_by;     ///< reference B_y (current sheet)
};

/// All shipped cases, in presentation order.
const std::vector<CaseDefinition>& case_catalog();

/// Looks a case up by name. Throws ErrorCode::ConfigError listing the
/// known names when absent.
const CaseDefinition& find_case(const std::string& name);

/// Evaluates the initializer at every interior cell center of `grid`,
/// converts to conserved variables, and fills the ghost layers.
FieldArray build_initial_field(const CaseDefinition& c, const GridSpec& grid,
                               const BoundarySet& bc,
                               const PlasmaParams& par);

}  // namespace rtfp::app
