/// \file ec_flux.hpp
/// \brief Entropy-conservative two-point fluid fluxes and their high-order
///        extension by linear combination of two-point fluxes.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <span>

#include "core/defs.hpp"
#include "core/state.hpp"

namespace rtfp {

/// Logarithmic mean (a - b)/(ln a - ln b) for positive a, b, evaluated with
/// a series expansion near a = b to avoid the 0/0 form.
double log_mean(double a, double b);

/// Second-order entropy-conservative flux of one fluid species across the
/// interface between states wl and wr.
Vec5 ec_flux_fluid(const FluidPrim& wl, const FluidPrim& wr, double gamma,
                   Dir dir);

/// 2p-th order entropy-conservative flux built from two-point fluxes.
/// The window holds the 2p cells centered on the interface, which lies
/// between window[p-1] and window[p]. Supported p: 1, 2, 3.
Vec5 ec_flux_high_order(std::span<const FluidPrim> window, double gamma,
                        Dir dir, int p);

/// Combination weight a_{p,r} of the two-point flux F(U_{i-s}, U_{i-s+r})
/// in the 2p-th order flux. Supported p: 1, 2, 3 with 1 <= r <= p.
double ec_combination_weight(int p, int r);

}  // namespace rtfp
