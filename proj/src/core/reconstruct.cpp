/// \file reconstruct.cpp
/// \brief Scalar face reconstructions and scaled entropy-variable faces.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "core/errors.hpp"

namespace rtfp {

namespace {

double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) {
    return std::min(a, b);
  }
  if (a < 0.0 && b < 0.0) {
    return std::max(a, b);
  }
  return 0.0;
}

/// Lagrange evaluation of the polynomial through (l, w[l]), ..., (r, w[r])
/// at abscissa x, with unit-spaced sample positions.
double lagrange_eval(std::span<const double> w, int l, int r, double x) {
  double acc = 0.0;
  for (int j = l; j <= r; ++j) {
    double basis = 1.0;
    for (int m = l; m <= r; ++m) {
      if (m != j) {
        basis *= (x - m) / (j - m);
      }
    }
    acc += w[j] * basis;
  }
  return acc;
}

}  // namespace

FaceValues minmod_reconstruct(std::span<const double, 3> window) {
  const double slope = minmod(window[1] - window[0], window[2] - window[1]);
  return {window[1] - 0.5 * slope, window[1] + 0.5 * slope};
}

FaceValues eno_reconstruct(int k, std::span<const double> window) {
  if (k < 2 || k > 4 || static_cast<int>(window.size()) != 2 * k - 1) {
    throw_error(ErrorCode::InvalidArgument,
                "ENO order must be 2..4 with a window of 2k-1 samples");
  }
  const int n = 2 * k - 1;
  const int center = k - 1;

  // Divided differences on the unit-spaced window: dd[m][j] covers
  // samples j..j+m.
  std::array<std::array<double, 7>, 4> dd{};
  for (int j = 0; j < n; ++j) {
    dd[0][j] = window[j];
  }
  for (int m = 1; m < k; ++m) {
    for (int j = 0; j + m < n; ++j) {
      dd[m][j] = (dd[m - 1][j + 1] - dd[m - 1][j]) / m;
    }
  }

  // Grow the stencil from the center sample, preferring the side with the
  // smaller divided difference; ties go left.
  int l = center;
  int r = center;
  for (int m = 1; m < k; ++m) {
    if (std::abs(dd[m][l - 1]) <= std::abs(dd[m][l])) {
      --l;
    } else {
      ++r;
    }
  }

  return {lagrange_eval(window, l, r, center - 0.5),
          lagrange_eval(window, l, r, center + 0.5)};
}

namespace {

/// WENO combination at the right face of the center cell for a window in
/// upwind order. The left face of the original window is the right face of
/// the reversed window.
double weno_right_face(std::span<const double> w) {
  constexpr double eps = 1e-6;
  if (w.size() == 3) {
    const double b0 = (w[1] - w[0]) * (w[1] - w[0]);
    const double b1 = (w[2] - w[1]) * (w[2] - w[1]);
    const double a0 = (1.0 / 3.0) / ((eps + b0) * (eps + b0));
    const double a1 = (2.0 / 3.0) / ((eps + b1) * (eps + b1));
    const double v0 = 0.5 * (-w[0] + 3.0 * w[1]);
    const double v1 = 0.5 * (w[1] + w[2]);
    return (a0 * v0 + a1 * v1) / (a0 + a1);
  }
  const double b0 = 13.0 / 12.0 * std::pow(w[0] - 2.0 * w[1] + w[2], 2) +
                    0.25 * std::pow(w[0] - 4.0 * w[1] + 3.0 * w[2], 2);
  const double b1 = 13.0 / 12.0 * std::pow(w[1] - 2.0 * w[2] + w[3], 2) +
                    0.25 * std::pow(w[1] - w[3], 2);
  const double b2 = 13.0 / 12.0 * std::pow(w[2] - 2.0 * w[3] + w[4], 2) +
                    0.25 * std::pow(3.0 * w[2] - 4.0 * w[3] + w[4], 2);
  const double a0 = 0.1 / ((eps + b0) * (eps + b0));
  const double a1 = 0.6 / ((eps + b1) * (eps + b1));
  const double a2 = 0.3 / ((eps + b2) * (eps + b2));
  const double v0 = (2.0 * w[0] - 7.0 * w[1] + 11.0 * w[2]) / 6.0;
  const double v1 = (-w[1] + 5.0 * w[2] + 2.0 * w[3]) / 6.0;
  const double v2 = (2.0 * w[2] + 5.0 * w[3] - w[4]) / 6.0;
  return (a0 * v0 + a1 * v1 + a2 * v2) / (a0 + a1 + a2);
}

}  // namespace

FaceValues weno_reconstruct(int k, std::span<const double> window) {
  if ((k != 3 && k != 5) || static_cast<int>(window.size()) != k) {
    throw_error(ErrorCode::InvalidArgument,
                "WENO order must be 3 or 5 with a window of k samples");
  }
  std::array<double, 5> reversed{};
  for (int j = 0; j < k; ++j) {
    reversed[j] = window[k - 1 - j];
  }
  return {weno_right_face(std::span<const double>(reversed.data(), k)),
          weno_right_face(window)};
}

namespace {

/// Scalar face reconstruction used for the scaled entropy variables:
/// copy (k = 1), min-mod (k = 2) or ENO (k = 3, 4).
FaceValues scalar_faces(int k, std::span<const double> window) {
  switch (k) {
    case 1:
      return {window[0], window[0]};
    case 2:
      return minmod_reconstruct(window.first<3>());
    case 3:
    case 4:
      return eno_reconstruct(k, window);
    default:
      throw_error(ErrorCode::InvalidArgument,
                  "scaled reconstruction order must be 1..4");
  }
}

}  // namespace

Vec5 scaled_face_vector(std::span<const Vec5> window, const Mat5& rt, int k,
                        bool plus_face) {
  const int n = 2 * k - 1;
  if (static_cast<int>(window.size()) != n) {
    throw_error(ErrorCode::InvalidArgument,
                "scaled reconstruction window must hold 2k-1 vectors");
  }
  // Transform the window into the scaled basis, one scalar series per
  // component.
  std::array<std::array<double, 7>, 5> scal{};
  for (int j = 0; j < n; ++j) {
    const Vec5 s = rt.transpose() * window[j];
    for (int cidx = 0; cidx < 5; ++cidx) {
      scal[cidx][j] = s(cidx);
    }
  }
  Vec5 face;
  for (int cidx = 0; cidx < 5; ++cidx) {
    const FaceValues fv =
        scalar_faces(k, std::span<const double>(scal[cidx].data(), n));
    face(cidx) = plus_face ? fv.plus : fv.minus;
  }
  return face;
}

std::pair<Vec5, Vec5> scaled_entropy_faces(std::span<const Vec5> window,
                                           const Mat5& rt_left,
                                           const Mat5& rt_right, int k) {
  const Vec5 minus = scaled_face_vector(window, rt_left, k, false);
  const Vec5 plus = scaled_face_vector(window, rt_right, k, true);
  return {rt_left.transpose().fullPivLu().solve(minus),
          rt_right.transpose().fullPivLu().solve(plus)};
}

}  // namespace rtfp
