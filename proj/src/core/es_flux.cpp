/// \file es_flux.cpp
/// \brief Entropy-stable fluid and Rusanov Maxwell interface fluxes.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/es_flux.hpp"

#include <algorithm>
#include <vector>

#include "core/ec_flux.hpp"
#include "core/eigensystem.hpp"
#include "core/errors.hpp"
#include "core/flux.hpp"
#include "core/reconstruct.hpp"
#include "core/state.hpp"

namespace rtfp {

FluidPrim interface_state(const FluidPrim& left, const FluidPrim& right) {
  FluidPrim avg;
  avg.rho = 0.5 * (left.rho + right.rho);
  avg.u = 0.5 * (left.u + right.u);
  avg.p = 0.5 * (left.p + right.p);
  if (!fluid_admissible(avg)) {
    throw_error(ErrorCode::Inadmissible,
                "averaged interface state left the admissible set");
  }
  return avg;
}

DiffusionOperator diffusion_matrix(Dir dir, const FluidPrim& left,
                                   const FluidPrim& right, double gamma) {
  const FluidPrim avg = interface_state(left, right);
  DiffusionOperator op;
  op.rt = scaled_eigenvectors(avg, gamma, dir);
  op.lambda_max = std::max({fluid_max_speed(left, gamma, dir),
                            fluid_max_speed(right, gamma, dir),
                            fluid_max_speed(avg, gamma, dir)});
  return op;
}

int ec_order_for(int k) {
  if (k < 1 || k > 4) {
    throw_error(ErrorCode::InvalidArgument,
                "reconstruction order must be 1..4");
  }
  return (k % 2 == 0) ? k / 2 : (k + 1) / 2;
}

Vec5 es_fluid_flux(Dir dir, int k, std::span<const FluidPrim> stencil,
                   double gamma) {
  const int p = ec_order_for(k);
  if (static_cast<int>(stencil.size()) != 2 * k) {
    throw_error(ErrorCode::InvalidArgument,
                "entropy-stable flux stencil must hold 2k states");
  }

  const DiffusionOperator op =
      diffusion_matrix(dir, stencil[k - 1], stencil[k], gamma);

  // Interior entropy-conservative part on the 2p cells around the interface.
  const Vec5 ec = ec_flux_high_order(stencil.subspan(k - p, 2 * p), gamma,
                                     dir, p);

  // Reconstructed jump of the scaled entropy variables at the interface,
  // formed directly in the interface basis so that D [[V]] = R~ Lambda
  // [[scaled V]] without a back-transform.
  std::vector<Vec5> v(stencil.size());
  for (std::size_t j = 0; j < stencil.size(); ++j) {
    v[j] = entropy_variables(stencil[j], gamma);
  }
  const std::span<const Vec5> vs(v);
  const Vec5 face_left =
      scaled_face_vector(vs.subspan(0, 2 * k - 1), op.rt, k, true);
  const Vec5 face_right =
      scaled_face_vector(vs.subspan(1, 2 * k - 1), op.rt, k, false);
  const Vec5 jump = face_right - face_left;

  return ec - 0.5 * op.lambda_max * (op.rt * jump);
}

namespace {

/// Componentwise face reconstruction for the Maxwell block: cell value for
/// k = 1, min-mod for k = 2, WENO3 / WENO5 above that.
double maxwell_face(int k, std::span<const double> window, bool plus_face) {
  FaceValues fv;
  switch (k) {
    case 1:
      return window[0];
    case 2:
      fv = minmod_reconstruct(window.first<3>());
      break;
    case 3:
      fv = weno_reconstruct(3, window);
      break;
    default:
      fv = weno_reconstruct(5, window);
      break;
  }
  return plus_face ? fv.plus : fv.minus;
}

}  // namespace

Vec8 rusanov_maxwell_flux(Dir dir, int k, std::span<const Vec8> stencil,
                          double kappa, double chi, bool literal_unit_speed) {
  if (k < 1 || k > 5) {
    throw_error(ErrorCode::InvalidArgument,
                "reconstruction order must be 1..5");
  }
  if (static_cast<int>(stencil.size()) != 2 * k) {
    throw_error(ErrorCode::InvalidArgument,
                "Maxwell flux stencil must hold 2k states");
  }
  // Window width of the scalar reconstruction, centered on each of the two
  // cells adjacent to the interface between stencil[k-1] and stencil[k].
  const int width = (k <= 2) ? 2 * k - 1 : ((k == 3) ? 3 : 5);
  const int half = width / 2;

  Vec8 minus;
  Vec8 plus;
  std::vector<double> wl(width);
  std::vector<double> wr(width);
  for (int c = 0; c < kEmComp; ++c) {
    for (int j = 0; j < width; ++j) {
      wl[j] = stencil[k - 1 - half + j](c);
      wr[j] = stencil[k - half + j](c);
    }
    minus(c) = maxwell_face(k, wl, true);
    plus(c) = maxwell_face(k, wr, false);
  }

  const double c_max =
      literal_unit_speed ? 1.0 : std::max({1.0, kappa, chi});
  return 0.5 * (maxwell_flux(minus, kappa, chi, dir) +
                maxwell_flux(plus, kappa, chi, dir)) -
         0.5 * c_max * (plus - minus);
}

}  // namespace rtfp
