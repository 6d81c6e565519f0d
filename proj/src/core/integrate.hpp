/// \file integrate.hpp
/// \brief Strong-stability-preserving Runge-Kutta steppers (orders 2 to 4)
///        and additive implicit-explicit Runge-Kutta steppers (orders 2 to
///        4) over a generic semi-discrete operator.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace rtfp {

using StateVec = Eigen::VectorXd;

/// Right-hand side of the semi-discrete system, du/dt = rhs(u, t).
using RhsFn = std::function<StateVec(const StateVec&, double)>;

/// Convex-combination tableau of a strong-stability-preserving scheme:
/// stage m forms sum_l alpha[m][l] U^l + dt sum_l beta[m][l] L(U^l).
struct SspTable {
  int order = 0;
  int stages = 0;
  std::vector<std::vector<double>> alpha;
  std::vector<std::vector<double>> beta;
  std::vector<double> stage_time;  ///< abscissa of each stage state U^l
};

/// Tableau for the requested order (2, 3 or 4; order 4 is the five-stage
/// low-storage scheme).
const SspTable& ssp_table(int order);

/// One strong-stability-preserving Runge-Kutta step from time t.
StateVec ssp_rk_step(int order, const StateVec& u, double t, double dt,
                     const RhsFn& rhs);

/// Additive Runge-Kutta tableau pair: the non-stiff part advances with the
/// explicit table a_ns, the stiff part with the diagonally implicit table
/// a_s. b_s_printed keeps the stiff weights exactly as printed in the
/// third-order reference table (they are that scheme's embedded
/// second-order weights; the default combination uses the stiffly accurate
/// row for both parts).
struct ArkTable {
  int order = 0;
  int stages = 0;
  Eigen::MatrixXd a_ns;
  Eigen::MatrixXd a_s;
  Eigen::VectorXd b_ns;
  Eigen::VectorXd b_s;
  Eigen::VectorXd c_ns;
  Eigen::VectorXd c_s;
  Eigen::VectorXd b_s_printed;  ///< empty unless the order stores one
};

/// Tableau for the requested order (2, 3 or 4).
const ArkTable& ark_table(int order);

/// Operators of the additive split du/dt = F_NS(u, t) + F_S(u). The stiff
/// part is autonomous; its stages solve u = known + coeff * F_S(u) through
/// stiff_solve, which receives a warm-start guess.
struct ImexOps {
  RhsFn nonstiff;
  std::function<StateVec(const StateVec&)> stiff;
  std::function<StateVec(const StateVec& known, double coeff,
                         const StateVec& guess)>
      stiff_solve;
};

/// One implicit-explicit step from time t. With printed_stiff_weights the
/// third-order scheme combines the stiff part with the literal printed
/// weights instead of the stiffly accurate row.
StateVec ark_imex_step(int order, const StateVec& u, double t, double dt,
                       const ImexOps& ops,
                       bool printed_stiff_weights = false);

}  // namespace rtfp
