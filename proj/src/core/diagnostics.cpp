/// \file diagnostics.cpp
/// \brief Entropy totals, divergence norms, reference errors, and the
///        reconnected-flux integral.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "core/diagnostics.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/flux.hpp"

namespace rtfp {

namespace {

/// Compensated accumulator; keeps grid reductions deterministic and
/// accurate independent of the cell count.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

std::pair<double, double> total_entropy(const FieldArray& field,
                                        const GridSpec& grid,
                                        const PlasmaParams& par,
                                        const SolveControls& ctl) {
  KahanSum ion;
  KahanSum ele;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const PrimState w = cons_to_prim(field.at(i, j), par, ctl);
      ion.add(entropy_density(w.ion, par.gamma_i));
      ele.add(entropy_density(w.ele, par.gamma_e));
    }
  }
  const double cell = grid.dx() * grid.dy();
  return {cell * ion.value(), cell * ele.value()};
}

double div_b_l1(const FieldArray& field, const GridSpec& grid) {
  const int bx = comp::kEmOffset + comp::Bx;
  const int by = comp::kEmOffset + comp::By;
  KahanSum sum;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      double div = (field.at(i + 1, j)(bx) - field.at(i - 1, j)(bx)) /
                   (2.0 * grid.dx());
      if (!grid.one_dimensional()) {
        div += (field.at(i, j + 1)(by) - field.at(i, j - 1)(by)) /
               (2.0 * grid.dy());
      }
      sum.add(std::abs(div));
    }
  }
  return grid.dx() * grid.dy() * sum.value();
}

std::vector<double> undivided_div_b(const FieldArray& field,
                                    const GridSpec& grid) {
  const double dx = grid.dx();
  if (!grid.one_dimensional() &&
      std::abs(grid.dy() - dx) > 1e-12 * std::abs(dx)) {
    throw_error(ErrorCode::InvalidArgument,
                "undivided divergence map requires square cells");
  }
  const int bx = comp::kEmOffset + comp::Bx;
  const int by = comp::kEmOffset + comp::By;
  std::vector<double> map(static_cast<size_t>(grid.nx) * grid.ny);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      double div = (field.at(i + 1, j)(bx) - field.at(i - 1, j)(bx)) /
                   (2.0 * dx);
      if (!grid.one_dimensional()) {
        div += (field.at(i, j + 1)(by) - field.at(i, j - 1)(by)) /
               (2.0 * dx);
      }
      map[static_cast<size_t>(j) * grid.nx + i] = std::abs(2.0 * dx * div);
    }
  }
  return map;
}

double l1_error(const FieldArray& field, const GridSpec& grid,
                const PlasmaParams& par,
                const std::function<double(const PrimState&)>& value,
                const std::function<double(double, double)>& reference,
                const SolveControls& ctl) {
  KahanSum sum;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const PrimState w = cons_to_prim(field.at(i, j), par, ctl);
      sum.add(std::abs(value(w) - reference(grid.xc(i), grid.yc(j))));
    }
  }
  return grid.dx() * grid.dy() * sum.value();
}

double reconnected_flux(const FieldArray& field, const GridSpec& grid,
                        double b0) {
  if (grid.y_min >= 0.0 || grid.y_max <= 0.0) {
    throw_error(ErrorCode::InvalidArgument,
                "reconnected flux requires a domain straddling y = 0");
  }
  int row = 0;
  double best = std::abs(grid.yc(0));
  for (int j = 1; j < grid.ny; ++j) {
    const double d = std::abs(grid.yc(j));
    // Strict inequality keeps the earlier (lower) row on a tie, so an
    // even cell count across a symmetric domain selects the row just
    // below the axis.
    if (d < best) {
      best = d;
      row = j;
    }
  }
  const int by = comp::kEmOffset + comp::By;
  KahanSum sum;
  for (int i = 0; i < grid.nx; ++i) {
    sum.add(std::abs(field.at(i, row)(by)));
  }
  return sum.value() * grid.dx() / (2.0 * b0);
}

}  // namespace rtfp
