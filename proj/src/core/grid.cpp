/// \file grid.cpp
/// \brief Ghost-cell fills for periodic, extrapolation, and conducting
///        wall boundaries.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/grid.hpp"

#include "core/errors.hpp"

namespace rtfp {

namespace {

/// Reflects a state across a wall with the given normal axis (0 = x,
/// 1 = y). The normal momentum flips for both species; the normal
/// magnetic component, tangential electric components, and the electric
/// correction potential flip as well, which keeps the tangential E and
/// normal B zero at a perfectly conducting surface.
Vec18 wall_reflect(const Vec18& q, int axis) {
  Vec18 out = q;
  const int mom = 1 + axis;
  out(comp::kIonOffset + mom) = -q(comp::kIonOffset + mom);
  out(comp::kEleOffset + mom) = -q(comp::kEleOffset + mom);
  const int bn = comp::kEmOffset + comp::Bx + axis;
  out(bn) = -q(bn);
  for (int d = 0; d < 3; ++d) {
    if (d == axis) continue;
    const int et = comp::kEmOffset + comp::Ex + d;
    out(et) = -q(et);
  }
  out(comp::kEmOffset + comp::Psi) = -q(comp::kEmOffset + comp::Psi);
  return out;
}

}  // namespace

Eigen::VectorXd FieldArray::interior() const {
  Eigen::VectorXd flat(static_cast<long>(nx_) * ny_ * kNumComp);
  long pos = 0;
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      flat.segment<kNumComp>(pos) = at(i, j);
      pos += kNumComp;
    }
  }
  return flat;
}

void FieldArray::set_interior(const Eigen::VectorXd& flat) {
  if (flat.size() != static_cast<long>(nx_) * ny_ * kNumComp) {
    throw_error(ErrorCode::InvalidArgument,
                "interior vector size does not match the grid");
  }
  long pos = 0;
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      at(i, j) = flat.segment<kNumComp>(pos);
      pos += kNumComp;
    }
  }
}

void apply_bc(FieldArray& field, const BoundarySet& bc) {
  if ((bc.x_lo == BcKind::Periodic) != (bc.x_hi == BcKind::Periodic)) {
    throw_error(ErrorCode::InvalidArgument,
                "periodic boundaries in x must be paired");
  }
  if ((bc.y_lo == BcKind::Periodic) != (bc.y_hi == BcKind::Periodic)) {
    throw_error(ErrorCode::InvalidArgument,
                "periodic boundaries in y must be paired");
  }

  const int nx = field.nx();
  const int ny = field.ny();
  const int gx = field.ghost_x();
  const int gy = field.ghost_y();

  for (int j = 0; j < ny; ++j) {
    for (int m = 1; m <= gx; ++m) {
      switch (bc.x_lo) {
        case BcKind::Periodic:
          field.at(-m, j) = field.at(nx - m, j);
          break;
        case BcKind::Neumann:
          field.at(-m, j) = field.at(0, j);
          break;
        case BcKind::ConductingWall:
          field.at(-m, j) = wall_reflect(field.at(m - 1, j), 0);
          break;
      }
      switch (bc.x_hi) {
        case BcKind::Periodic:
          field.at(nx - 1 + m, j) = field.at(m - 1, j);
          break;
        case BcKind::Neumann:
          field.at(nx - 1 + m, j) = field.at(nx - 1, j);
          break;
        case BcKind::ConductingWall:
          field.at(nx - 1 + m, j) = wall_reflect(field.at(nx - m, j), 0);
          break;
      }
    }
  }

  for (int m = 1; m <= gy; ++m) {
    for (int i = -gx; i < nx + gx; ++i) {
      switch (bc.y_lo) {
        case BcKind::Periodic:
          field.at(i, -m) = field.at(i, ny - m);
          break;
        case BcKind::Neumann:
          field.at(i, -m) = field.at(i, 0);
          break;
        case BcKind::ConductingWall:
          field.at(i, -m) = wall_reflect(field.at(i, m - 1), 1);
          break;
      }
      switch (bc.y_hi) {
        case BcKind::Periodic:
          field.at(i, ny - 1 + m) = field.at(i, m - 1);
          break;
        case BcKind::Neumann:
          field.at(i, ny - 1 + m) = field.at(i, ny - 1);
          break;
        case BcKind::ConductingWall:
          field.at(i, ny - 1 + m) = wall_reflect(field.at(i, ny - m), 1);
          break;
      }
    }
  }
}

}  // namespace rtfp
