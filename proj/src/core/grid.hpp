/// \file grid.hpp
/// \brief Uniform Cartesian grid with ghost layers, the cell-centered
///        field storage, and boundary-condition fills.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <vector>

#include "core/defs.hpp"

namespace rtfp {

/// Uniform 1D/2D grid. A 1D configuration uses ny = 1 and carries no
/// ghost layers in y.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  int nx = 1;     ///< interior cell count in x
  int ny = 1;     ///< interior cell count in y (1 selects 1D)
  int ghost = 3;  ///< ghost layer width (stencil half-width or more)

  double dx() const { return (x_max - x_min) / nx; }
  double dy() const { return (y_max - y_min) / ny; }
  double xc(int i) const { return x_min + (i + 0.5) * dx(); }
  double yc(int j) const { return y_min + (j + 0.5) * dy(); }
  bool one_dimensional() const { return ny == 1; }
};

/// Per-cell conserved vectors over the padded grid. Interior cells are
/// addressed by i in [0, nx) and j in [0, ny); ghost cells extend the
/// index range by the ghost width (x always, y only in 2D).
class FieldArray {
 public:
  FieldArray() = default;
  explicit FieldArray(const GridSpec& grid)
      : nx_(grid.nx),
        ny_(grid.ny),
        gx_(grid.ghost),
        gy_(grid.ny == 1 ? 0 : grid.ghost),
        data_(static_cast<size_t>(nx_ + 2 * gx_) * (ny_ + 2 * gy_) *
              kNumComp,
              0.0) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int ghost_x() const { return gx_; }
  int ghost_y() const { return gy_; }

  Eigen::Map<Vec18> at(int i, int j) {
    return Eigen::Map<Vec18>(data_.data() + index(i, j));
  }
  Eigen::Map<const Vec18> at(int i, int j) const {
    return Eigen::Map<const Vec18>(data_.data() + index(i, j));
  }

  /// Flattened copy of the interior (row-major over j, then i, then
  /// component), the layout exchanged with the time steppers.
  Eigen::VectorXd interior() const;
  void set_interior(const Eigen::VectorXd& flat);

 private:
  size_t index(int i, int j) const {
    return (static_cast<size_t>(j + gy_) * (nx_ + 2 * gx_) + (i + gx_)) *
           kNumComp;
  }

  int nx_ = 0;
  int ny_ = 0;
  int gx_ = 0;
  int gy_ = 0;
  std::vector<double> data_;
};

enum class BcKind {
  Periodic,
  Neumann,         ///< zero-order extrapolation of the nearest interior cell
  ConductingWall,  ///< perfect-conductor reflection
};

/// Boundary selection per side. Periodic sides must be paired.
struct BoundarySet {
  BcKind x_lo = BcKind::Periodic;
  BcKind x_hi = BcKind::Periodic;
  BcKind y_lo = BcKind::Periodic;
  BcKind y_hi = BcKind::Periodic;
};

/// Fills all ghost cells. The x pass runs over interior rows, then the y
/// pass extends every column including the x ghosts, which defines the
/// corner cells. Throws ErrorCode::InvalidArgument on unpaired periodic
/// sides.
void apply_bc(FieldArray& field, const BoundarySet& bc);

}  // namespace rtfp
