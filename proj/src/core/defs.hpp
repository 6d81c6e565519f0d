/// \file defs.hpp
/// \brief Fixed-size vector types and the state-vector component layout.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <Eigen/Dense>

namespace rtfp {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Vec18 = Eigen::Matrix<double, 18, 1>;

using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

/// Spatial direction of a flux or an interface.
enum class Dir : int { X = 0, Y = 1 };

/// Fluid species index. Two species share all fluid formulas; they differ
/// only in adiabatic index and charge-to-mass ratio.
enum class Species : int { Ion = 0, Electron = 1 };

/// Component layout of the 18-component conserved state vector:
///   [0..4]   ion fluid      (D, Mx, My, Mz, E)
///   [5..9]   electron fluid (D, Mx, My, Mz, E)
///   [10..17] electromagnetic (Bx, By, Bz, Ex, Ey, Ez, phi, psi)
namespace comp {
inline constexpr int kIonOffset = 0;
inline constexpr int kEleOffset = 5;
inline constexpr int kEmOffset = 10;

// Offsets within a 5-component fluid block.
inline constexpr int D = 0;   ///< relativistic mass density
inline constexpr int Mx = 1;  ///< momentum density, x
inline constexpr int My = 2;  ///< momentum density, y
inline constexpr int Mz = 3;  ///< momentum density, z
inline constexpr int En = 4;  ///< total energy density

// Offsets within the 8-component electromagnetic block.
inline constexpr int Bx = 0;
inline constexpr int By = 1;
inline constexpr int Bz = 2;
inline constexpr int Ex = 3;
inline constexpr int Ey = 4;
inline constexpr int Ez = 5;
inline constexpr int Phi = 6;  ///< divergence-cleaning potential for B
inline constexpr int Psi = 7;  ///< divergence-cleaning potential for E
}  // namespace comp

inline constexpr int kNumComp = 18;
inline constexpr int kFluidComp = 5;
inline constexpr int kEmComp = 8;

/// Offset of a species' fluid block inside the 18-component state.
inline constexpr int species_offset(Species s) {
  return s == Species::Ion ? comp::kIonOffset : comp::kEleOffset;
}

/// Primitive description of one fluid species.
struct FluidPrim {
  double rho = 0.0;  ///< rest-mass density
  Vec3 u = Vec3::Zero();  ///< velocity (units of light speed)
  double p = 0.0;  ///< pressure
};

}  // namespace rtfp
