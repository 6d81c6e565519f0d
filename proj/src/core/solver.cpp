/// \file solver.cpp
/// \brief Semi-discrete right-hand side assembly, CFL time-step control,
///        and the time-marching run loop.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/solver.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "core/diagnostics.hpp"
#include "core/ec_flux.hpp"
#include "core/eigensystem.hpp"
#include "core/errors.hpp"
#include "core/es_flux.hpp"
#include "core/flux.hpp"
#include "core/implicit.hpp"
#include "core/integrate.hpp"

namespace rtfp {

namespace {

std::string cell_tag(int i, int j) {
  return " (cell i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
}

std::string time_tag(long step, double t) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), " (step %ld, t=%.9g)", step, t);
  return buf;
}

/// Recovered primitives over the interior plus ex/ey extension layers.
class PrimBlock {
 public:
  PrimBlock(const FieldArray& field, const PlasmaParams& par, int ex,
            int ey, const SolveControls& ctl)
      : nx_(field.nx()), ex_(ex), ey_(ey) {
    w_.resize(static_cast<size_t>(nx_ + 2 * ex) * (field.ny() + 2 * ey));
    for (int j = -ey; j < field.ny() + ey; ++j) {
      for (int i = -ex; i < nx_ + ex; ++i) {
        try {
          at(i, j) = cons_to_prim(field.at(i, j), par, ctl);
        } catch (const Error& e) {
          throw_error(e.code(), e.what() + cell_tag(i, j));
        }
      }
    }
  }

  const PrimState& at(int i, int j) const {
    return w_[static_cast<size_t>(j + ey_) * (nx_ + 2 * ex_) + (i + ex_)];
  }
  PrimState& at(int i, int j) {
    return w_[static_cast<size_t>(j + ey_) * (nx_ + 2 * ex_) + (i + ex_)];
  }

 private:
  int nx_ = 0;
  int ex_ = 0;
  int ey_ = 0;
  std::vector<PrimState> w_;
};

/// Interface fluxes of one sweep line: 2k-cell stencils centered on every
/// interface m in [0, n], reading cells m-k .. m+k-1 of the line.
struct LineFluxes {
  std::vector<Vec5> ion;
  std::vector<Vec5> ele;
  std::vector<Vec8> em;
};

void sweep_line(Dir dir, int line_id, const std::vector<FluidPrim>& ion,
                const std::vector<FluidPrim>& ele,
                const std::vector<Vec8>& em, const SchemeConfig& scheme,
                const PlasmaParams& par, LineFluxes& out) {
  const int k = scheme.order;
  const int n = static_cast<int>(ion.size()) - 2 * k;
  const int p = ec_order_for(k);
  const char axis = dir == Dir::X ? 'x' : 'y';
  out.ion.resize(n + 1);
  out.ele.resize(n + 1);
  out.em.resize(n + 1);
  for (int m = 0; m <= n; ++m) {
    // Cells m-k .. m+k-1 of the line sit at offset m in the padded arrays.
    std::span<const FluidPrim> si(ion.data() + m, 2 * k);
    std::span<const FluidPrim> se(ele.data() + m, 2 * k);
    std::span<const Vec8> sm(em.data() + m, 2 * k);
    try {
      if (scheme.ec_only) {
        out.ion[m] = ec_flux_high_order(si.subspan(k - p, 2 * p),
                                        par.gamma_i, dir, p);
        out.ele[m] = ec_flux_high_order(se.subspan(k - p, 2 * p),
                                        par.gamma_e, dir, p);
      } else {
        out.ion[m] = es_fluid_flux(dir, k, si, par.gamma_i);
        out.ele[m] = es_fluid_flux(dir, k, se, par.gamma_e);
      }
      out.em[m] = rusanov_maxwell_flux(dir, k, sm, par.kappa, par.chi);
    } catch (const Error& e) {
      throw_error(e.code(), std::string(e.what()) + " (" + axis +
                                "-interface m=" + std::to_string(m) +
                                ", line " + std::to_string(line_id) + ")");
    }
  }
}

void check_scheme(const FieldArray& field, const GridSpec& grid,
                  const SchemeConfig& scheme) {
  if (scheme.order < 1 || scheme.order > 4) {
    throw_error(ErrorCode::InvalidArgument,
                "scheme order must be 1 to 4, got " +
                    std::to_string(scheme.order));
  }
  if (field.nx() != grid.nx || field.ny() != grid.ny) {
    throw_error(ErrorCode::InvalidArgument,
                "field dimensions do not match the grid");
  }
  if (field.ghost_x() < scheme.order ||
      (!grid.one_dimensional() && field.ghost_y() < scheme.order)) {
    throw_error(ErrorCode::InvalidArgument,
                "ghost width " + std::to_string(field.ghost_x()) +
                    " is too small for scheme order " +
                    std::to_string(scheme.order));
  }
}

}  // namespace

double max_signal_speed(const PrimState& w, const PlasmaParams& par,
                        Dir dir) {
  double s = std::max(fluid_max_speed(w.ion, par.gamma_i, dir),
                      fluid_max_speed(w.ele, par.gamma_e, dir));
  return std::max({s, 1.0, par.kappa, par.chi});
}

double cfl_dt(const FieldArray& field, const GridSpec& grid,
              const PlasmaParams& par, double cfl, bool harmonic,
              const SolveControls& ctl) {
  if (!(cfl > 0.0)) {
    throw_error(ErrorCode::InvalidArgument, "CFL number must be positive");
  }
  const double dx = grid.dx();
  const double dy = grid.dy();
  double shortest = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      PrimState w;
      try {
        w = cons_to_prim(field.at(i, j), par, ctl);
      } catch (const Error& e) {
        throw_error(e.code(), e.what() + cell_tag(i, j));
      }
      const double lx = max_signal_speed(w, par, Dir::X);
      double cand;
      if (grid.one_dimensional()) {
        cand = dx / lx;
      } else {
        const double ly = max_signal_speed(w, par, Dir::Y);
        cand = harmonic ? 1.0 / (lx / dx + ly / dy) : dx / lx + dy / ly;
      }
      shortest = std::min(shortest, cand);
    }
  }
  return cfl * shortest;
}

void semi_discrete_rhs(const FieldArray& field, const GridSpec& grid,
                       const SchemeConfig& scheme, const PlasmaParams& par,
                       bool include_source, const ForcingFn& forcing,
                       double t, FieldArray& tendency,
                       const SolveControls& ctl) {
  check_scheme(field, grid, scheme);
  if (tendency.nx() != grid.nx || tendency.ny() != grid.ny) {
    throw_error(ErrorCode::InvalidArgument,
                "tendency dimensions do not match the grid");
  }
  const int k = scheme.order;
  const int nx = grid.nx;
  const int ny = grid.ny;
  const bool two_d = !grid.one_dimensional();
  const double inv_dx = 1.0 / grid.dx();
  const double inv_dy = 1.0 / grid.dy();

  const PrimBlock prims(field, par, k, two_d ? k : 0, ctl);

  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      tendency.at(i, j).setZero();
    }
  }

  std::vector<FluidPrim> ion_line(nx + 2 * k);
  std::vector<FluidPrim> ele_line(nx + 2 * k);
  std::vector<Vec8> em_line(nx + 2 * k);
  LineFluxes fx;
  for (int j = 0; j < ny; ++j) {
    for (int i = -k; i < nx + k; ++i) {
      const PrimState& w = prims.at(i, j);
      ion_line[i + k] = w.ion;
      ele_line[i + k] = w.ele;
      em_line[i + k] = w.em;
    }
    sweep_line(Dir::X, j, ion_line, ele_line, em_line, scheme, par, fx);
    for (int i = 0; i < nx; ++i) {
      auto q = tendency.at(i, j);
      q.segment<5>(comp::kIonOffset) -= inv_dx * (fx.ion[i + 1] - fx.ion[i]);
      q.segment<5>(comp::kEleOffset) -= inv_dx * (fx.ele[i + 1] - fx.ele[i]);
      q.segment<8>(comp::kEmOffset) -= inv_dx * (fx.em[i + 1] - fx.em[i]);
    }
  }

  if (two_d) {
    std::vector<FluidPrim> ion_col(ny + 2 * k);
    std::vector<FluidPrim> ele_col(ny + 2 * k);
    std::vector<Vec8> em_col(ny + 2 * k);
    LineFluxes fy;
    for (int i = 0; i < nx; ++i) {
      for (int j = -k; j < ny + k; ++j) {
        const PrimState& w = prims.at(i, j);
        ion_col[j + k] = w.ion;
        ele_col[j + k] = w.ele;
        em_col[j + k] = w.em;
      }
      sweep_line(Dir::Y, i, ion_col, ele_col, em_col, scheme, par, fy);
      for (int j = 0; j < ny; ++j) {
        auto q = tendency.at(i, j);
        q.segment<5>(comp::kIonOffset) -=
            inv_dy * (fy.ion[j + 1] - fy.ion[j]);
        q.segment<5>(comp::kEleOffset) -=
            inv_dy * (fy.ele[j + 1] - fy.ele[j]);
        q.segment<8>(comp::kEmOffset) -= inv_dy * (fy.em[j + 1] - fy.em[j]);
      }
    }
  }

  if (include_source || forcing) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        auto q = tendency.at(i, j);
        if (include_source) {
          q += combined_source(prims.at(i, j), par);
        }
        if (forcing) {
          q += forcing(grid.xc(i), grid.yc(j), t);
        }
      }
    }
  }
}

double manufactured_density(double x, double t) {
  return 2.0 + std::sin(2.0 * M_PI * (x - 0.5 * t));
}

Vec18 manufactured_forcing(double x, double t) {
  const double rho = manufactured_density(x, t);
  const double root3 = std::sqrt(3.0);
  Vec18 s = Vec18::Zero();
  s(comp::kEmOffset + comp::Ex) = -rho / root3;
  s(comp::kEmOffset + comp::Ez) =
      -3.0 * M_PI * std::cos(2.0 * M_PI * (x - 0.5 * t));
  s(comp::kEmOffset + comp::Phi) = 2.0 * rho / root3;
  return s;
}

RunRecord run(const FieldArray& initial, const RunSetup& setup,
              const SnapshotFn& on_sample) {
  const GridSpec& grid = setup.grid;
  check_scheme(initial, grid, setup.scheme);
  if (setup.time.order < 2 || setup.time.order > 4) {
    throw_error(ErrorCode::ConfigError,
                "time integrator order must be 2 to 4, got " +
                    std::to_string(setup.time.order));
  }
  if (setup.t_end < setup.t_start) {
    throw_error(ErrorCode::ConfigError, "t_end precedes t_start");
  }
  if (setup.time.fixed_dt <= 0.0 && !(setup.time.cfl > 0.0)) {
    throw_error(ErrorCode::ConfigError,
                "either a positive CFL number or a fixed step is required");
  }
  if (setup.max_steps <= 0) {
    throw_error(ErrorCode::ConfigError, "max_steps must be positive");
  }

  const PlasmaParams& par = setup.params;
  const SolveControls& ctl = setup.controls;
  const int nx = grid.nx;
  const int ny = grid.ny;
  const long ncell = static_cast<long>(nx) * ny;

  FieldArray work = initial;
  FieldArray tend(grid);
  StateVec u = work.interior();

  RunRecord rec;
  rec.max_newton_iterations = 0;

  // Both partitions share the workspace; the steppers call them strictly
  // in sequence.
  auto pde_rhs = [&](const StateVec& v, double tt,
                     bool with_source) -> StateVec {
    work.set_interior(v);
    apply_bc(work, setup.bc);
    semi_discrete_rhs(work, grid, setup.scheme, par, with_source,
                      setup.forcing, tt, tend, ctl);
    return tend.interior();
  };

  RhsFn explicit_rhs = [&](const StateVec& v, double tt) {
    return pde_rhs(v, tt, true);
  };

  ImexOps ops;
  if (setup.time.imex) {
    ops.nonstiff = [&](const StateVec& v, double tt) {
      return pde_rhs(v, tt, false);
    };
    ops.stiff = [&](const StateVec& v) {
      StateVec out(v.size());
      for (long c = 0; c < ncell; ++c) {
        const Vec18 q = v.segment<18>(18 * c);
        try {
          out.segment<18>(18 * c) =
              combined_source(cons_to_prim(q, par, ctl), par);
        } catch (const Error& e) {
          throw_error(e.code(), e.what() + cell_tag(static_cast<int>(c % nx),
                                                    static_cast<int>(c / nx)));
        }
      }
      return out;
    };
    ops.stiff_solve = [&](const StateVec& known, double coeff,
                          const StateVec& guess) {
      StateVec out(known.size());
      for (long c = 0; c < ncell; ++c) {
        ImplicitCellProblem prob;
        prob.known = known.segment<18>(18 * c);
        prob.coeff = coeff;
        prob.params = par;
        prob.guess = guess.segment<18>(18 * c);
        try {
          ImplicitSolveResult res = implicit_cell_solve(prob, ctl);
          rec.max_newton_iterations =
              std::max(rec.max_newton_iterations, res.iterations);
          out.segment<18>(18 * c) = res.u;
        } catch (const Error& e) {
          throw_error(e.code(), e.what() + cell_tag(static_cast<int>(c % nx),
                                                    static_cast<int>(c / nx)));
        }
      }
      return out;
    };
  }

  double t = setup.t_start;
  const double eps = 1e-12 * std::max(1.0, std::abs(setup.t_end));

  auto record_sample = [&](long step) {
    work.set_interior(u);
    apply_bc(work, setup.bc);
    DiagnosticSample s;
    s.t = t;
    std::tie(s.entropy_ion, s.entropy_ele) =
        total_entropy(work, grid, par, ctl);
    s.divb_l1 = div_b_l1(work, grid);
    if (setup.track_psi) {
      s.psi = reconnected_flux(work, grid, setup.psi_b0);
    }
    rec.series.push_back(s);
    if (on_sample) {
      on_sample(work, t, step);
    }
  };

  try {
    record_sample(0);
  } catch (const Error& e) {
    throw_error(e.code(), e.what() + time_tag(0, t));
  }

  double next_sample = setup.t_start + setup.sample_interval;
  while (t < setup.t_end - eps) {
    if (rec.steps >= setup.max_steps) {
      throw_error(ErrorCode::ConfigError,
                  "step budget exhausted" + time_tag(rec.steps, t));
    }
    double dt;
    try {
      if (setup.time.fixed_dt > 0.0) {
        dt = setup.time.fixed_dt;
      } else {
        work.set_interior(u);
        dt = cfl_dt(work, grid, par, setup.time.cfl,
                    setup.time.harmonic_cfl, ctl);
      }
      dt = std::min(dt, setup.t_end - t);
      u = setup.time.imex
              ? ark_imex_step(setup.time.order, u, t, dt, ops)
              : ssp_rk_step(setup.time.order, u, t, dt, explicit_rhs);
    } catch (const Error& e) {
      throw_error(e.code(), e.what() + time_tag(rec.steps, t));
    }
    t += dt;
    ++rec.steps;
    const bool last = t >= setup.t_end - eps;
    if (setup.sample_interval <= 0.0 || last || t >= next_sample - eps) {
      try {
        record_sample(rec.steps);
      } catch (const Error& e) {
        throw_error(e.code(), e.what() + time_tag(rec.steps, t));
      }
      while (setup.sample_interval > 0.0 && next_sample <= t + eps) {
        next_sample += setup.sample_interval;
      }
    }
  }

  work.set_interior(u);
  rec.field = std::move(work);
  rec.t_final = t;
  return rec;
}

}  // namespace rtfp
