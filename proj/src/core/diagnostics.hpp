/// \file diagnostics.hpp
/// \brief Grid-level diagnostics: entropy totals, discrete divergence
///        norms, reference errors, and the reconnected-flux integral.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "core/grid.hpp"
#include "core/params.hpp"
#include "core/state.hpp"

namespace rtfp {

/// Integrated entropy density per species, Σ 𝒰_α ΔxΔy over interior
/// cells with recovered primitives. Returns (ion total, electron total).
std::pair<double, double> total_entropy(const FieldArray& field,
                                        const GridSpec& grid,
                                        const PlasmaParams& par,
                                        const SolveControls& ctl = {});

/// L1 norm of the central-difference magnetic divergence over interior
/// cells, ΔxΔy Σ |∇·B|. Ghost cells must be filled.
double div_b_l1(const FieldArray& field, const GridSpec& grid);

/// Per-cell |2Δx (∇·B)| map (row-major over j then i), the undivided
/// divergence used for snapshot plots. Requires Δx = Δy; throws
/// ErrorCode::InvalidArgument otherwise. Ghost cells must be filled.
std::vector<double> undivided_div_b(const FieldArray& field,
                                    const GridSpec& grid);

/// L1 error ΔxΔy Σ |value(prim) − reference(x, y)| against a closure
/// evaluated at cell centers.
double l1_error(const FieldArray& field, const GridSpec& grid,
                const PlasmaParams& par,
                const std::function<double(const PrimState&)>& value,
                const std::function<double(double, double)>& reference,
                const SolveControls& ctl = {});

/// Reconnected magnetic flux (1/2B₀) Σ |B_y| Δx along the interior row
/// whose center is nearest y = 0 (for an even cell count across a
/// symmetric domain, the row just below the axis). Throws
/// ErrorCode::InvalidArgument when the domain does not straddle y = 0.
double reconnected_flux(const FieldArray& field, const GridSpec& grid,
                        double b0);

}  // namespace rtfp
