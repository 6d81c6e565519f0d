/// \file implicit.cpp
/// \brief Analytic source Jacobian and the per-cell Newton stage solve.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/implicit.hpp"

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/eigensystem.hpp"
#include "core/flux.hpp"

namespace rtfp {

namespace {

Eigen::Matrix3d cross_matrix(const Vec3& a) {
  Eigen::Matrix3d m;
  m << 0.0, -a(2), a(1), a(2), 0.0, -a(0), -a(1), a(0), 0.0;
  return m;
}

/// Column indices of one species' primitive block.
struct SpeciesCols {
  int rho;
  int u;
};

}  // namespace

Mat18 source_jacobian_prim(const PrimState& w, const PlasmaParams& par) {
  Mat18 jac = Mat18::Zero();
  const Vec3 b = w.em.segment<3>(comp::Bx);
  const Vec3 e = w.em.segment<3>(comp::Ex);

  const std::array<const FluidPrim*, 2> fluids{&w.ion, &w.ele};
  const std::array<double, 2> charges{par.r_i, par.r_e};
  const std::array<int, 2> offsets{comp::kIonOffset, comp::kEleOffset};

  // Lorentz rows of each species plus the current and charge couplings of
  // the electromagnetic rows.
  for (int a = 0; a < 2; ++a) {
    const FluidPrim& f = *fluids[a];
    const double r = charges[a];
    const double gl = lorentz_factor(f.u);
    const double dens = gl * f.rho;
    const Vec3 force = e + f.u.cross(b);
    // Row/column bases of this species.
    const int row = offsets[a];
    const SpeciesCols col{offsets[a], offsets[a] + 1};
    // d D / d u enters wherever the source scales with D.
    const Eigen::RowVector3d ddens_du =
        (f.rho * gl * gl * gl) * f.u.transpose();

    jac.block<3, 1>(row + 1, col.rho) = (r * gl) * force;
    jac.block<3, 3>(row + 1, col.u) =
        -(r * dens) * cross_matrix(b) + r * force * ddens_du;
    jac.block<3, 3>(row + 1, comp::kEmOffset + comp::Ex) =
        (r * dens) * Eigen::Matrix3d::Identity();
    jac.block<3, 3>(row + 1, comp::kEmOffset + comp::Bx) =
        (r * dens) * cross_matrix(f.u);

    const double ue = f.u.dot(e);
    jac(row + 4, col.rho) = r * gl * ue;
    jac.block<1, 3>(row + 4, col.u) =
        (r * dens) * e.transpose() + (r * ue) * ddens_du;
    jac.block<1, 3>(row + 4, comp::kEmOffset + comp::Ex) =
        (r * dens) * f.u.transpose();

    // Electric-field rows: -scale * j; potential row: scale * chi * rho_c.
    const double sc = par.source_scale;
    jac.block<3, 1>(comp::kEmOffset + comp::Ex, col.rho) =
        (-sc * r * gl) * f.u;
    jac.block<3, 3>(comp::kEmOffset + comp::Ex, col.u) =
        -sc * r *
        (dens * Eigen::Matrix3d::Identity() + f.u * ddens_du);
    jac(comp::kEmOffset + comp::Phi, col.rho) = sc * par.chi * r * gl;
    jac.block<1, 3>(comp::kEmOffset + comp::Phi, col.u) =
        (sc * par.chi * r) * ddens_du;
  }

  if (par.eta > 0.0) {
    // Interspecies friction, added to the ion rows and subtracted from the
    // electron rows. All quantities follow the momentum-exchange display.
    const double sc = par.source_scale;
    const double ri = par.r_i;
    const double re = par.r_e;
    const double gli = lorentz_factor(w.ion.u);
    const double gle = lorentz_factor(w.ele.u);
    const double di = gli * w.ion.rho;
    const double de = gle * w.ele.rho;
    const double w2 = sc * (ri * ri * w.ion.rho + re * re * w.ele.rho);
    const double nl = sc * (ri * ri * di + re * re * de);
    const Vec3 j = ri * di * w.ion.u + re * de * w.ele.u;
    const double rho_c = ri * di + re * de;
    const double rho0 = (nl * rho_c - j.squaredNorm()) / w2;
    const double kf = -par.eta / (ri - re);

    // The friction couples both species' rows to both species' columns;
    // assemble per column block of each species.
    for (int a = 0; a < 2; ++a) {
      const FluidPrim& f = *fluids[a];
      const double r = charges[a];
      const double gl = (a == 0) ? gli : gle;
      const double dens = (a == 0) ? di : de;
      const SpeciesCols col{offsets[a], offsets[a] + 1};
      const Eigen::RowVector3d ddens_du =
          (f.rho * gl * gl * gl) * f.u.transpose();

      // Density column of species a.
      {
        const double dw2 = sc * r * r;
        const double dnl = sc * r * r * gl;
        const double drc = r * gl;
        const Vec3 dj = r * gl * f.u;
        const double drho0 =
            (dnl * rho_c + nl * drc - 2.0 * j.dot(dj) - rho0 * dw2) / w2;
        const Vec3 dmom = kf * ((dw2 - drho0) * j + (w2 - rho0) * dj);
        const double den =
            kf * (dw2 * rho_c + w2 * drc - drho0 * nl - rho0 * dnl);
        jac.block<3, 1>(comp::kIonOffset + 1, col.rho) += dmom;
        jac(comp::kIonOffset + 4, col.rho) += den;
        jac.block<3, 1>(comp::kEleOffset + 1, col.rho) -= dmom;
        jac(comp::kEleOffset + 4, col.rho) -= den;
      }
      // Velocity columns of species a.
      {
        const Eigen::RowVector3d dnl_du = sc * r * r * ddens_du;
        const Eigen::RowVector3d drc_du = r * ddens_du;
        const Eigen::Matrix3d dj_du =
            r * (dens * Eigen::Matrix3d::Identity() + f.u * ddens_du);
        const Eigen::RowVector3d drho0_du =
            (rho_c * dnl_du + nl * drc_du - 2.0 * j.transpose() * dj_du) /
            w2;
        const Eigen::Matrix3d dmom_du =
            kf * (-j * drho0_du + (w2 - rho0) * dj_du);
        const Eigen::RowVector3d den_du =
            kf * (w2 * drc_du - nl * drho0_du - rho0 * dnl_du);
        jac.block<3, 3>(comp::kIonOffset + 1, col.u) += dmom_du;
        jac.block<1, 3>(comp::kIonOffset + 4, col.u) += den_du;
        jac.block<3, 3>(comp::kEleOffset + 1, col.u) -= dmom_du;
        jac.block<1, 3>(comp::kEleOffset + 4, col.u) -= den_du;
      }
    }
  }

  return jac;
}

Mat18 source_jacobian(const PrimState& w, const PlasmaParams& par) {
  const Mat18 prim = source_jacobian_prim(w, par);
  Mat18 jac = prim;
  const Mat5 ji = prim_to_cons_jacobian(w.ion, par.gamma_i);
  const Mat5 je = prim_to_cons_jacobian(w.ele, par.gamma_e);
  jac.block<18, 5>(0, comp::kIonOffset) =
      prim.block<18, 5>(0, comp::kIonOffset) * ji.partialPivLu().inverse();
  jac.block<18, 5>(0, comp::kEleOffset) =
      prim.block<18, 5>(0, comp::kEleOffset) * je.partialPivLu().inverse();
  return jac;
}

namespace {

/// Recovery of both fluids with warm-started pressure guesses; returns
/// false when either species fails instead of throwing, so the line search
/// can back off.
bool try_recover(const Vec18& u, const PlasmaParams& par,
                 const SolveControls& ctl, double& pg_i, double& pg_e,
                 PrimState& out) {
  const RecoveryResult ri = fluid_cons_to_prim(
      u.segment<kFluidComp>(comp::kIonOffset), par.gamma_i, ctl, pg_i);
  if (!ri.converged || !fluid_admissible(ri.prim)) {
    return false;
  }
  const RecoveryResult re = fluid_cons_to_prim(
      u.segment<kFluidComp>(comp::kEleOffset), par.gamma_e, ctl, pg_e);
  if (!re.converged || !fluid_admissible(re.prim)) {
    return false;
  }
  out.ion = ri.prim;
  out.ele = re.prim;
  out.em = u.segment<kEmComp>(comp::kEmOffset);
  pg_i = ri.prim.p;
  pg_e = re.prim.p;
  return true;
}

}  // namespace

ImplicitSolveResult implicit_cell_solve(const ImplicitCellProblem& prob,
                                        const SolveControls& ctl) {
  ImplicitSolveResult res;
  res.u = prob.known;
  res.iterations = 0;
  if (prob.coeff == 0.0) {
    return res;
  }

  static constexpr std::array<int, 12> kFullUnknowns{
      1, 2, 3, 4, 6, 7, 8, 9, 13, 14, 15, 16};
  static constexpr std::array<int, 4> kFieldUnknowns{13, 14, 15, 16};
  const std::span<const int> idx =
      prob.freeze_fluids
          ? std::span<const int>(kFieldUnknowns)
          : std::span<const int>(kFullUnknowns);
  const int n = static_cast<int>(idx.size());

  double pg_i = -1.0;
  double pg_e = -1.0;
  Vec18 u = prob.known;
  if (prob.guess.size() == kNumComp) {
    for (int c : idx) {
      u(c) = prob.guess(c);
    }
  }

  PrimState w;
  if (!try_recover(u, prob.params, ctl, pg_i, pg_e, w)) {
    // Retry from the known vector before giving up.
    u = prob.known;
    if (!try_recover(u, prob.params, ctl, pg_i, pg_e, w)) {
      throw_error(ErrorCode::RecoveryFailure,
                  "implicit stage has no admissible starting point");
    }
  }

  const double tol = ctl.newton_tol * (1.0 + prob.known.norm());
  auto residual = [&](const Vec18& state, const PrimState& prim,
                      Eigen::VectorXd& g) {
    const Vec18 s = combined_source(prim, prob.params);
    g.resize(n);
    for (int c = 0; c < n; ++c) {
      g(c) = state(idx[c]) - prob.known(idx[c]) - prob.coeff * s(idx[c]);
    }
  };

  Eigen::VectorXd g;
  residual(u, w, g);
  for (int it = 0; it < ctl.newton_max_iter; ++it) {
    if (g.norm() < tol) {
      res.u = u;
      res.iterations = it;
      return res;
    }
    const Mat18 js = source_jacobian(w, prob.params);
    Eigen::MatrixXd jg = Eigen::MatrixXd::Identity(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        jg(r, c) -= prob.coeff * js(idx[r], idx[c]);
      }
    }
    const Eigen::VectorXd dz = jg.partialPivLu().solve(-g);

    // Backtracking line search on half the squared residual norm.
    const double f0 = 0.5 * g.squaredNorm();
    double lambda = 1.0;
    bool accepted = false;
    while (lambda >= ctl.newton_min_step) {
      Vec18 u_try = u;
      for (int c = 0; c < n; ++c) {
        u_try(idx[c]) += lambda * dz(c);
      }
      PrimState w_try;
      if (try_recover(u_try, prob.params, ctl, pg_i, pg_e, w_try)) {
        Eigen::VectorXd g_try;
        residual(u_try, w_try, g_try);
        if (0.5 * g_try.squaredNorm() <=
            f0 * (1.0 - 2.0 * ctl.armijo_c * lambda)) {
          u = u_try;
          w = w_try;
          g = g_try;
          accepted = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!accepted) {
      throw_error(ErrorCode::NewtonFailure,
                  "implicit stage line search stalled, residual " +
                      std::to_string(g.norm()));
    }
  }
  if (g.norm() < tol) {
    res.u = u;
    res.iterations = ctl.newton_max_iter;
    return res;
  }
  throw_error(ErrorCode::NewtonFailure,
              "implicit stage did not converge in " +
                  std::to_string(ctl.newton_max_iter) +
                  " iterations, residual " + std::to_string(g.norm()));
}

}  // namespace rtfp
