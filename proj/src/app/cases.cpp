/// \file cases.cpp
/// \brief Benchmark case definitions.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "app/cases.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace rtfp::app {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

/// Traveling wave with analytic forcing; exact ion density known for all
/// times, so this case drives the convergence tables.
CaseDefinition accuracy_case() {
  CaseDefinition c;
  c.name = "accuracy";
  c.summary =
      "forced smooth traveling wave on [0,1], exact solution known (t=2)";
  c.grid.x_min = 0.0;
  c.grid.x_max = 1.0;
  c.grid.nx = 100;
  c.grid.ny = 1;
  c.bc = BoundarySet{};  // fully periodic
  c.params.gamma_i = 5.0 / 3.0;
  c.params.gamma_e = 5.0 / 3.0;
  c.params.r_i = 1.0;
  c.params.r_e = -2.0;
  c.initializer = [](double x, double, const PlasmaParams&) {
    const double s = std::sin(kTwoPi * x);
    PrimState w;
    w.ion.rho = 2.0 + s;
    w.ion.u = Vec3(0.5, 0.0, 0.0);
    w.ion.p = 1.0;
    w.ele = w.ion;
    w.em(comp::By) = 2.0 * s;
    w.em(comp::Ez) = -s;
    return w;
  };
  c.forced = true;
  c.scheme.order = 2;
  c.time.order = 2;
  c.time.cfl = 0.8;
  c.t_end = 2.0;
  c.sample_interval = 0.25;
  c.reference_rho_i = [](double x, double, double t) {
    return manufactured_density(x, t);
  };
  return c;
}

/// Two-fluid shock tube; the stiffness of the electromagnetic coupling is
/// set by `ratio` (charge-to-mass magnitude before the sqrt(4 pi) unit
/// factor).
CaseDefinition brio_wu_case(const std::string& name, const std::string& label,
                            double ratio) {
  CaseDefinition c;
  c.name = name;
  c.summary = "two-fluid shock tube, r_i = " + label +
              "/sqrt(4 pi), Gaussian units (t=0.4)";
  c.grid.x_min = -0.5;
  c.grid.x_max = 0.5;
  c.grid.nx = 400;
  c.grid.ny = 1;
  c.bc.x_lo = BcKind::Neumann;
  c.bc.x_hi = BcKind::Neumann;
  c.params.gamma_i = 2.0;
  c.params.gamma_e = 2.0;
  c.params.r_i = ratio / std::sqrt(4.0 * M_PI);
  c.params.r_e = -c.params.r_i;
  c.params.source_scale = 4.0 * M_PI;
  c.initializer = [](double x, double, const PlasmaParams&) {
    PrimState w;
    const bool left = x < 0.0;
    w.ion.rho = left ? 0.5 : 0.0625;
    w.ion.p = left ? 0.5 : 0.05;
    w.ele = w.ion;
    w.em(comp::Bx) = std::sqrt(M_PI);
    w.em(comp::By) = left ? std::sqrt(4.0 * M_PI) : -std::sqrt(4.0 * M_PI);
    return w;
  };
  c.scheme.order = 2;
  c.time.imex = true;
  c.time.order = 2;
  c.time.cfl = 0.8;
  c.t_end = 0.4;
  c.sample_interval = 0.01;
  return c;
}

/// Resistive diffusion of a magnetic-field reversal; B_y follows the
/// self-similar erf profile of the induction equation.
CaseDefinition current_sheet_case() {
  CaseDefinition c;
  c.name = "current_sheet";
  c.summary =
      "resistive sheet on [-1.5,1.5], B_y relaxes along erf(x/2 sqrt(D t)) "
      "(t=1 to 9)";
  c.grid.x_min = -1.5;
  c.grid.x_max = 1.5;
  c.grid.nx = 400;
  c.grid.ny = 1;
  c.bc.x_lo = BcKind::Neumann;
  c.bc.x_hi = BcKind::Neumann;
  c.params.gamma_i = 5.0 / 3.0;
  c.params.gamma_e = 5.0 / 3.0;
  c.params.r_i = 1.0e3;
  c.params.r_e = -1.0e3;
  c.params.eta = 0.01;
  c.initializer = [](double x, double, const PlasmaParams& par) {
    if (!(par.eta > 0.0)) {
      throw_error(ErrorCode::ConfigError,
                  "current_sheet requires a positive resistivity");
    }
    const double diff = par.eta;  // D = eta c^2 with c = 1
    PrimState w;
    w.ion.rho = 0.5;
    w.ion.p = 25.0;
    w.ion.u(2) = std::exp(-x * x / (4.0 * diff)) /
                 (par.r_i * 0.5 * std::sqrt(M_PI * diff));
    w.ele = w.ion;
    w.ele.u(2) = -w.ion.u(2);
    w.em(comp::By) = std::erf(x / (2.0 * std::sqrt(diff)));  // t0 = 1
    return w;
  };
  c.scheme.order = 2;
  c.time.imex = true;
  c.time.order = 2;
  c.time.cfl = 0.8;
  c.t_start = 1.0;
  c.t_end = 9.0;
  c.sample_interval = 0.5;
  c.reference_by = [](double x, double, double t) {
    return std::erf(x / (2.0 * std::sqrt(0.01 * t)));
  };
  return c;
}

/// Doubly periodic vortex; the classic transition-to-turbulence picture
/// with both species sharing the initial flow.
CaseDefinition orszag_tang_case() {
  CaseDefinition c;
  c.name = "orszag_tang";
  c.summary = "periodic vortex on [0,1]^2, Gaussian units (t=1)";
  c.grid.x_min = 0.0;
  c.grid.x_max = 1.0;
  c.grid.y_min = 0.0;
  c.grid.y_max = 1.0;
  c.grid.nx = 64;
  c.grid.ny = 64;
  c.bc = BoundarySet{};  // fully periodic
  c.params.gamma_i = 5.0 / 3.0;
  c.params.gamma_e = 5.0 / 3.0;
  c.params.r_i = 1.0e3 / std::sqrt(4.0 * M_PI);
  c.params.r_e = -c.params.r_i;
  c.params.source_scale = 4.0 * M_PI;
  c.initializer = [](double x, double y, const PlasmaParams&) {
    PrimState w;
    w.ion.rho = 25.0 / (72.0 * M_PI);
    w.ion.u = Vec3(-0.5 * std::sin(kTwoPi * y), 0.5 * std::sin(kTwoPi * x),
                   0.0);
    w.ion.p = 5.0 / (24.0 * M_PI);
    w.ele = w.ion;
    const Vec3 b(-std::sin(kTwoPi * y), std::sin(2.0 * kTwoPi * x), 0.0);
    w.em.segment<3>(comp::Bx) = b;
    w.em.segment<3>(comp::Ex) = -w.ion.u.cross(b);
    return w;
  };
  c.scheme.order = 3;
  c.time.imex = true;
  c.time.order = 3;
  c.time.cfl = 0.45;
  c.t_end = 1.0;
  c.sample_interval = 0.05;
  return c;
}

/// Cylindrical explosion into a magnetized low-density ambient, with a
/// linear ramp joining the inner and outer states.
CaseDefinition blast_case(const std::string& name, const std::string& label,
                          double b0) {
  CaseDefinition c;
  c.name = name;
  c.summary = "cylindrical blast on [-6,6]^2, B_x = " + label + " (t=4)";
  c.grid.x_min = -6.0;
  c.grid.x_max = 6.0;
  c.grid.y_min = -6.0;
  c.grid.y_max = 6.0;
  c.grid.nx = 96;
  c.grid.ny = 96;
  c.bc.x_lo = BcKind::Neumann;
  c.bc.x_hi = BcKind::Neumann;
  c.bc.y_lo = BcKind::Neumann;
  c.bc.y_hi = BcKind::Neumann;
  c.params.gamma_i = 4.0 / 3.0;
  c.params.gamma_e = 4.0 / 3.0;
  c.params.r_i = 1.0e3;
  c.params.r_e = -1.0e3;
  c.initializer = [b0](double x, double y, const PlasmaParams&) {
    const double rho_in = 0.5e-2, p_in = 0.5;
    const double rho_out = 0.5e-4, p_out = 2.5e-4;
    const double r = std::sqrt(x * x + y * y);
    double rho, p;
    if (r < 0.8) {
      rho = rho_in;
      p = p_in;
    } else if (r > 1.0) {
      rho = rho_out;
      p = p_out;
    } else {
      const double f = (r - 0.8) / 0.2;
      rho = rho_in + f * (rho_out - rho_in);
      p = p_in + f * (p_out - p_in);
    }
    PrimState w;
    w.ion.rho = rho;
    w.ion.p = p;
    w.ele = w.ion;
    w.em(comp::Bx) = b0;
    return w;
  };
  c.scheme.order = 3;
  c.time.imex = true;
  c.time.order = 3;
  c.time.cfl = 0.45;
  c.t_end = 4.0;
  c.sample_interval = 0.1;
  return c;
}

/// Harris-sheet reconnection with a flux perturbation; tracks the
/// reconnected flux along the midline.
CaseDefinition gem_case() {
  CaseDefinition c;
  c.name = "gem";
  c.summary =
      "reconnecting Harris sheet on [-4 pi,4 pi]x[-2 pi,2 pi], resistive "
      "(t=40)";
  c.grid.x_min = -4.0 * M_PI;
  c.grid.x_max = 4.0 * M_PI;
  c.grid.y_min = -2.0 * M_PI;
  c.grid.y_max = 2.0 * M_PI;
  c.grid.nx = 128;
  c.grid.ny = 64;
  c.bc.x_lo = BcKind::Periodic;
  c.bc.x_hi = BcKind::Periodic;
  c.bc.y_lo = BcKind::ConductingWall;
  c.bc.y_hi = BcKind::ConductingWall;
  c.params.gamma_i = 4.0 / 3.0;
  c.params.gamma_e = 4.0 / 3.0;
  c.params.r_i = 1.0;
  c.params.r_e = -25.0;
  c.params.eta = 0.01;
  c.initializer = [](double x, double y, const PlasmaParams&) {
    const double b0 = 1.0;    // asymptotic field
    const double d = 1.0;     // sheet thickness
    const double psi0 = 0.1;  // perturbation amplitude
    const double lx = 8.0 * M_PI;
    const double ly = 4.0 * M_PI;
    const double sech = 1.0 / std::cosh(y / d);
    const double sech2 = sech * sech;
    const double n = sech2 + 0.2;
    PrimState w;
    w.ion.rho = n;
    w.ion.u(2) = 0.5 * b0 * sech2 / (d * n);
    w.ion.p = 0.2 + 0.25 * b0 * b0 * sech2;
    w.ele.rho = n / 25.0;
    w.ele.u(2) = -w.ion.u(2);
    w.ele.p = w.ion.p;
    w.em(comp::Bx) = b0 * (std::tanh(y / d) -
                           psi0 * (M_PI / ly) * std::cos(M_PI * x / lx) *
                               std::sin(M_PI * y / ly));
    w.em(comp::By) = b0 * psi0 * (M_PI / lx) * std::sin(M_PI * x / lx) *
                     std::cos(M_PI * y / ly);
    return w;
  };
  c.scheme.order = 3;
  c.time.imex = true;
  c.time.order = 3;
  c.time.cfl = 0.45;
  c.t_end = 40.0;
  c.sample_interval = 0.5;
  c.track_psi = true;
  c.psi_b0 = 1.0;
  return c;
}

}  // namespace

const std::vector<CaseDefinition>& case_catalog() {
  static const std::vector<CaseDefinition> catalog = {
      accuracy_case(),
      brio_wu_case("brio_wu", "10^3", 1.0e3),
      brio_wu_case("brio_wu_r1e4", "10^4", 1.0e4),
      brio_wu_case("brio_wu_r1e5", "10^5", 1.0e5),
      current_sheet_case(),
      orszag_tang_case(),
      blast_case("blast_weak", "0.1", 0.1),
      blast_case("blast_strong", "1.0", 1.0),
      gem_case(),
  };
  return catalog;
}

const CaseDefinition& find_case(const std::string& name) {
  for (const CaseDefinition& c : case_catalog()) {
    if (c.name == name) {
      return c;
    }
  }
  std::string known;
  for (const CaseDefinition& c : case_catalog()) {
    known += known.empty() ? c.name : ", " + c.name;
  }
  throw_error(ErrorCode::ConfigError,
              "unknown case '" + name + "' (known: " + known + ")");
}

FieldArray build_initial_field(const CaseDefinition& c, const GridSpec& grid,
                               const BoundarySet& bc,
                               const PlasmaParams& par) {
  FieldArray field(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      field.at(i, j) = prim_to_cons(c.initializer(grid.xc(i), grid.yc(j), par),
                                    par);
    }
  }
  apply_bc(field, bc);
  return field;
}

}  // namespace rtfp::app
