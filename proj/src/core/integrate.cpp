/// \file integrate.cpp
/// \brief Tableau data and stepping loops for the explicit and
///        implicit-explicit Runge-Kutta schemes.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/integrate.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace rtfp {

namespace {

SspTable make_ssp_table(int order) {
  SspTable t;
  t.order = order;
  switch (order) {
    case 2:
      t.stages = 2;
      t.alpha = {{1.0}, {0.5, 0.5}};
      t.beta = {{1.0}, {0.0, 0.5}};
      break;
    case 3:
      t.stages = 3;
      t.alpha = {{1.0}, {0.75, 0.25}, {1.0 / 3.0, 0.0, 2.0 / 3.0}};
      t.beta = {{1.0}, {0.0, 0.25}, {0.0, 0.0, 2.0 / 3.0}};
      break;
    case 4:
      // Five-stage fourth-order scheme of Spiteri-Ruuth type.
      t.stages = 5;
      t.alpha = {{1.0},
                 {0.44437049406734, 0.55562950593266},
                 {0.62010185138540, 0.0, 0.37989814861460},
                 {0.17807995410773, 0.0, 0.0, 0.82192004589227},
                 {0.00683325884039, 0.0, 0.51723167208978, 0.12759831133288,
                  0.34833675773694}};
      t.beta = {{0.39175222700392},
                {0.0, 0.36841059262959},
                {0.0, 0.0, 0.25189177424738},
                {0.0, 0.0, 0.0, 0.54497475021237},
                {0.0, 0.0, 0.0, 0.08460416338212, 0.22600748319395}};
      break;
    default:
      throw_error(ErrorCode::InvalidArgument,
                  "explicit scheme order must be 2, 3 or 4");
  }
  // Stage abscissae follow the convex recurrence c_m = sum alpha c_l +
  // sum beta.
  t.stage_time.assign(t.stages + 1, 0.0);
  for (int m = 1; m <= t.stages; ++m) {
    double c = 0.0;
    for (int l = 0; l < m; ++l) {
      c += t.alpha[m - 1][l] * t.stage_time[l] + t.beta[m - 1][l];
    }
    t.stage_time[m] = c;
  }
  return t;
}

ArkTable make_ark_table(int order) {
  ArkTable t;
  t.order = order;
  if (order == 2) {
    // Two-stage L-stable scheme with gamma = 1 - 1/sqrt(2); the first
    // stage is implicit-only and the explicit part is evaluated at the
    // stage states with trapezoidal weights.
    const double g = 1.0 - 1.0 / std::sqrt(2.0);
    t.stages = 2;
    t.a_ns = Eigen::MatrixXd::Zero(2, 2);
    t.a_ns(1, 0) = 1.0;
    t.a_s = Eigen::MatrixXd::Zero(2, 2);
    t.a_s(0, 0) = g;
    t.a_s(1, 0) = 1.0 - 2.0 * g;
    t.a_s(1, 1) = g;
    t.b_ns = Eigen::Vector2d(0.5, 0.5);
    t.b_s = t.b_ns;
    t.c_ns = Eigen::Vector2d(0.0, 1.0);
    t.c_s = Eigen::Vector2d(g, 1.0 - g);
  } else if (order == 3) {
    // Four-stage third-order pair; the diagonally implicit table has a
    // first explicit stage and constant diagonal gamma. Entries are kept
    // as the printed rationals.
    const double g = 1767732205903.0 / 4055673282236.0;
    t.stages = 4;
    t.a_ns = Eigen::MatrixXd::Zero(4, 4);
    t.a_ns(1, 0) = 1767732205903.0 / 2027836641118.0;
    t.a_ns(2, 0) = 5535828885825.0 / 10492691773637.0;
    t.a_ns(2, 1) = 788022342437.0 / 10882634858940.0;
    t.a_ns(3, 0) = 6485989280629.0 / 16251701735622.0;
    t.a_ns(3, 1) = -4246266847089.0 / 9704473918619.0;
    t.a_ns(3, 2) = 10755448449292.0 / 10357097424841.0;
    t.a_s = Eigen::MatrixXd::Zero(4, 4);
    t.a_s(1, 0) = g;
    t.a_s(1, 1) = g;
    t.a_s(2, 0) = 2746238789719.0 / 10658868560708.0;
    t.a_s(2, 1) = -640167445237.0 / 6845629431997.0;
    t.a_s(2, 2) = g;
    t.a_s(3, 0) = 1471266399579.0 / 7840856788654.0;
    t.a_s(3, 1) = -4482444167858.0 / 7529755066697.0;
    t.a_s(3, 2) = 11266239266428.0 / 11593286722821.0;
    t.a_s(3, 3) = g;
    // Stiffly accurate: both weight rows equal the last implicit row.
    t.b_ns = t.a_s.row(3).transpose();
    t.b_s = t.b_ns;
    t.b_s_printed = Eigen::Vector4d(2756255671327.0 / 12835298489170.0,
                                    -10771552573575.0 / 22201958757719.0,
                                    9247589265047.0 / 10645013368117.0,
                                    2193209047091.0 / 5459859503100.0);
    t.c_ns = Eigen::Vector4d(0.0, 1767732205903.0 / 2027836641118.0, 0.6,
                             1.0);
    t.c_s = t.c_ns;
  } else if (order == 4) {
    // Six-stage fourth-order pair with shared weights and abscissae and a
    // constant implicit diagonal of one quarter.
    t.stages = 6;
    t.a_ns = Eigen::MatrixXd::Zero(6, 6);
    t.a_ns(1, 0) = 0.5;
    t.a_ns(2, 0) = 13861.0 / 62500.0;
    t.a_ns(2, 1) = 6889.0 / 62500.0;
    t.a_ns(3, 0) = -116923316275.0 / 2393684061468.0;
    t.a_ns(3, 1) = -2731218467317.0 / 15368042101831.0;
    t.a_ns(3, 2) = 9408046702089.0 / 11113171139209.0;
    t.a_ns(4, 0) = -451086348788.0 / 2902428689909.0;
    t.a_ns(4, 1) = -2682348792572.0 / 7519795681897.0;
    t.a_ns(4, 2) = 12662868775082.0 / 11960479115383.0;
    t.a_ns(4, 3) = 3355817975965.0 / 11060851509271.0;
    t.a_ns(5, 0) = 647845179188.0 / 3216320057751.0;
    t.a_ns(5, 1) = 73281519250.0 / 8382639484533.0;
    t.a_ns(5, 2) = 552539513391.0 / 3454668386233.0;
    t.a_ns(5, 3) = 3354512671639.0 / 8306763924573.0;
    t.a_ns(5, 4) = 4040.0 / 17871.0;
    t.a_s = Eigen::MatrixXd::Zero(6, 6);
    t.a_s(1, 0) = 0.25;
    t.a_s(1, 1) = 0.25;
    t.a_s(2, 0) = 8611.0 / 62500.0;
    t.a_s(2, 1) = -1743.0 / 31250.0;
    t.a_s(2, 2) = 0.25;
    t.a_s(3, 0) = 5012029.0 / 34652500.0;
    t.a_s(3, 1) = -654441.0 / 2922500.0;
    t.a_s(3, 2) = 174375.0 / 388108.0;
    t.a_s(3, 3) = 0.25;
    t.a_s(4, 0) = 15267082809.0 / 155376265600.0;
    t.a_s(4, 1) = -71443401.0 / 120774400.0;
    t.a_s(4, 2) = 730878875.0 / 902184768.0;
    t.a_s(4, 3) = 2285395.0 / 8070912.0;
    t.a_s(4, 4) = 0.25;
    t.a_s(5, 0) = 82889.0 / 524892.0;
    t.a_s(5, 1) = 0.0;
    t.a_s(5, 2) = 15625.0 / 83664.0;
    t.a_s(5, 3) = 69875.0 / 102672.0;
    t.a_s(5, 4) = -2260.0 / 8211.0;
    t.a_s(5, 5) = 0.25;
    t.b_ns = t.a_s.row(5).transpose();
    t.b_s = t.b_ns;
    Eigen::VectorXd c(6);
    c << 0.0, 0.5, 83.0 / 250.0, 31.0 / 50.0, 17.0 / 20.0, 1.0;
    t.c_ns = c;
    t.c_s = c;
  } else {
    throw_error(ErrorCode::InvalidArgument,
                "implicit-explicit scheme order must be 2, 3 or 4");
  }
  return t;
}

}  // namespace

const SspTable& ssp_table(int order) {
  static const SspTable t2 = make_ssp_table(2);
  static const SspTable t3 = make_ssp_table(3);
  static const SspTable t4 = make_ssp_table(4);
  switch (order) {
    case 2:
      return t2;
    case 3:
      return t3;
    case 4:
      return t4;
    default:
      throw_error(ErrorCode::InvalidArgument,
                  "explicit scheme order must be 2, 3 or 4");
  }
}

const ArkTable& ark_table(int order) {
  static const ArkTable t2 = make_ark_table(2);
  static const ArkTable t3 = make_ark_table(3);
  static const ArkTable t4 = make_ark_table(4);
  switch (order) {
    case 2:
      return t2;
    case 3:
      return t3;
    case 4:
      return t4;
    default:
      throw_error(ErrorCode::InvalidArgument,
                  "implicit-explicit scheme order must be 2, 3 or 4");
  }
}

StateVec ssp_rk_step(int order, const StateVec& u, double t, double dt,
                     const RhsFn& rhs) {
  if (!(dt > 0.0)) {
    throw_error(ErrorCode::InvalidArgument, "time step must be positive");
  }
  const SspTable& tab = ssp_table(order);
  std::vector<StateVec> stages(tab.stages + 1);
  std::vector<StateVec> slopes(tab.stages + 1);
  stages[0] = u;
  for (int m = 1; m <= tab.stages; ++m) {
    StateVec next = StateVec::Zero(u.size());
    for (int l = 0; l < m; ++l) {
      const double a = tab.alpha[m - 1][l];
      const double b = tab.beta[m - 1][l];
      if (a != 0.0) {
        next += a * stages[l];
      }
      if (b != 0.0) {
        if (slopes[l].size() == 0) {
          try {
            slopes[l] = rhs(stages[l], t + tab.stage_time[l] * dt);
          } catch (const Error& e) {
            throw_error(e.code(), std::string(e.what()) + " (stage " +
                                      std::to_string(l) + ")");
          }
        }
        next += (dt * b) * slopes[l];
      }
    }
    stages[m] = std::move(next);
  }
  return stages[tab.stages];
}

StateVec ark_imex_step(int order, const StateVec& u, double t, double dt,
                       const ImexOps& ops, bool printed_stiff_weights) {
  if (!(dt > 0.0)) {
    throw_error(ErrorCode::InvalidArgument, "time step must be positive");
  }
  const ArkTable& tab = ark_table(order);
  if (printed_stiff_weights && tab.b_s_printed.size() == 0) {
    throw_error(ErrorCode::InvalidArgument,
                "this order has no separately printed stiff weights");
  }
  const Eigen::VectorXd& b_s =
      printed_stiff_weights ? tab.b_s_printed : tab.b_s;

  std::vector<StateVec> f_ns(tab.stages);
  std::vector<StateVec> f_s(tab.stages);
  for (int m = 0; m < tab.stages; ++m) {
    StateVec known = u;
    for (int l = 0; l < m; ++l) {
      const double ans = tab.a_ns(m, l);
      const double as = tab.a_s(m, l);
      if (ans != 0.0) {
        known += (dt * ans) * f_ns[l];
      }
      if (as != 0.0) {
        known += (dt * as) * f_s[l];
      }
    }
    StateVec stage;
    const double diag = tab.a_s(m, m);
    try {
      if (diag == 0.0) {
        stage = known;
        f_s[m] = ops.stiff(stage);
      } else {
        stage = ops.stiff_solve(known, dt * diag, m == 0 ? u : known);
        // The solved stage satisfies stage = known + dt diag F_S(stage),
        // so the slope follows without re-evaluating the source.
        f_s[m] = (stage - known) / (dt * diag);
      }
      f_ns[m] = ops.nonstiff(stage, t + tab.c_ns(m) * dt);
    } catch (const Error& e) {
      throw_error(e.code(), std::string(e.what()) + " (stage " +
                                std::to_string(m) + ")");
    }
  }

  StateVec next = u;
  for (int m = 0; m < tab.stages; ++m) {
    if (tab.b_ns(m) != 0.0) {
      next += (dt * tab.b_ns(m)) * f_ns[m];
    }
    if (b_s(m) != 0.0) {
      next += (dt * b_s(m)) * f_s[m];
    }
  }
  return next;
}

}  // namespace rtfp
