/// \file reconstruct.hpp
/// \brief Scalar face reconstructions (min-mod, ENO, WENO) and the
///        sign-preserving reconstruction of scaled entropy variables.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <span>
#include <utility>

#include "core/defs.hpp"

namespace rtfp {

/// Reconstructed point values at the two faces of the window's center cell.
struct FaceValues {
  double minus = 0.0;  ///< value at the left face, x_i - dx/2
  double plus = 0.0;   ///< value at the right face, x_i + dx/2
};

/// Piecewise-linear reconstruction with min-mod limited slope.
/// The window holds (u_{i-1}, u_i, u_{i+1}).
FaceValues minmod_reconstruct(std::span<const double, 3> window);

/// ENO interpolation of degree k-1. The window holds 2k-1 point values
/// centered on the cell; the stencil grows by divided-difference comparison
/// with ties resolved toward the left. Supported k: 2, 3, 4.
FaceValues eno_reconstruct(int k, std::span<const double> window);

/// WENO face values of order k using the classical smoothness-weighted
/// combination of candidate stencils (epsilon = 1e-6, exponent 2). The
/// window holds k point values centered on the cell. Supported k: 3, 5.
FaceValues weno_reconstruct(int k, std::span<const double> window);

/// Face values of the center cell's entropy variables, reconstructed
/// componentwise in the locally scaled basis. Each face transforms the
/// whole window with that face's scaled eigenvectors (w = R~^T v),
/// reconstructs the center cell (k = 1: copy, k = 2: min-mod, k = 3, 4:
/// ENO), and maps the face value back through (R~^T)^-1. The window holds
/// 2k-1 entropy-variable vectors.
std::pair<Vec5, Vec5> scaled_entropy_faces(std::span<const Vec5> window,
                                           const Mat5& rt_left,
                                           const Mat5& rt_right, int k);

/// Scaled-space face value of the window's center cell in a fixed basis:
/// transforms the window with rt (w = R~^T v), reconstructs each
/// component, and returns the 5-vector at the requested face without the
/// back-transform. The entropy-stable flux forms jumps of these directly in
/// the interface basis.
Vec5 scaled_face_vector(std::span<const Vec5> window, const Mat5& rt, int k,
                        bool plus_face);

}  // namespace rtfp
