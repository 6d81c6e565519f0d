/// \file solver.hpp
/// \brief Semi-discrete right-hand side assembly, CFL time-step control,
///        and the time-marching run loop.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <functional>
#include <vector>

#include "core/grid.hpp"
#include "core/params.hpp"
#include "core/state.hpp"

namespace rtfp {

/// Spatial discretization choices.
struct SchemeConfig {
  int order = 2;         ///< stencil order k in {1, 2, 3, 4}
  bool ec_only = false;  ///< entropy-conservative fluid fluxes, no diffusion
};

/// Time discretization choices.
struct TimeConfig {
  bool imex = false;  ///< additive scheme with implicit sources
  int order = 2;      ///< integrator order, 2 to 4
  double cfl = 0.8;
  /// The step-size display sums the directional Δ/Λ terms in 2D; this
  /// flag selects the conservative harmonic combination instead.
  bool harmonic_cfl = false;
  double fixed_dt = 0.0;  ///< > 0 bypasses the CFL criterion
};

/// External forcing added to the non-stiff partition, evaluated at cell
/// centers. An empty function disables it.
using ForcingFn = std::function<Vec18(double x, double y, double t)>;

/// Largest eigenvalue magnitude over all 18 characteristic speeds of one
/// cell in the given direction (both fluids plus the light and correction
/// waves).
double max_signal_speed(const PrimState& w, const PlasmaParams& par,
                        Dir dir);

/// CFL-limited step size: CFL · min over cells of Δx/Λˣ in 1D. In 2D the
/// cellwise combination is Δx/Λˣ + Δy/Λʸ, or 1/(Λˣ/Δx + Λʸ/Δy) when the
/// harmonic flag is set.
double cfl_dt(const FieldArray& field, const GridSpec& grid,
              const PlasmaParams& par, double cfl, bool harmonic = false,
              const SolveControls& ctl = {});

/// Flux-divergence plus source tendency of every interior cell. Ghost
/// cells must be filled. With include_source the pointwise source is
/// added (explicit treatment); without it only fluxes and forcing enter,
/// leaving the stiff part to the implicit stages.
void semi_discrete_rhs(const FieldArray& field, const GridSpec& grid,
                       const SchemeConfig& scheme, const PlasmaParams& par,
                       bool include_source, const ForcingFn& forcing,
                       double t, FieldArray& tendency,
                       const SolveControls& ctl = {});

/// Forcing of the manufactured traveling-wave benchmark: the source that
/// keeps the state with both species at density 2 + sin(2π(x − t/2)) an
/// exact solution. Nonzero only in the electric-field and potential
/// slots.
Vec18 manufactured_forcing(double x, double t);

/// Species rest-mass density of the manufactured traveling-wave
/// solution.
double manufactured_density(double x, double t);

/// One diagnostics sample of the run loop.
struct DiagnosticSample {
  double t = 0.0;
  double entropy_ion = 0.0;
  double entropy_ele = 0.0;
  double divb_l1 = 0.0;
  double psi = 0.0;  ///< reconnected flux; meaningful when tracked
};

struct RunRecord {
  std::vector<DiagnosticSample> series;
  FieldArray field;  ///< final state (ghost cells stale)
  double t_final = 0.0;
  long steps = 0;
  int max_newton_iterations = 0;  ///< worst implicit cell solve of the run
};

/// Full run configuration.
struct RunSetup {
  GridSpec grid;
  BoundarySet bc;
  PlasmaParams params;
  SchemeConfig scheme;
  TimeConfig time;
  ForcingFn forcing;  ///< may be empty
  double t_start = 0.0;
  double t_end = 0.0;
  /// Diagnostics cadence in simulation time; values <= 0 sample every
  /// step.
  double sample_interval = 0.0;
  bool track_psi = false;
  double psi_b0 = 1.0;
  SolveControls controls;
  long max_steps = 100000000;
};

/// Called at every diagnostics sample with ghosts freshly filled.
using SnapshotFn = std::function<void(const FieldArray&, double t, long step)>;

/// Marches the initial field from t_start to t_end: fill ghosts, pick the
/// step (shortened to land exactly on t_end), advance, sample. Errors
/// from any stage are rethrown with the step index and time attached.
RunRecord run(const FieldArray& initial, const RunSetup& setup,
              const SnapshotFn& on_sample = {});

}  // namespace rtfp
