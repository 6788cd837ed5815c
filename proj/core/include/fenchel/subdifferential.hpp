#pragma once

#include "fenchel/convex_function.hpp"

namespace fenchel {

/// 1D subdifferential estimate [left one-sided slope, right one-sided slope]
/// at a point, from one-sided finite differences with step h.
///
/// Outside the effective domain the interval is empty. A +inf stencil value
/// produces an infinite interval end, which is the exact subdifferential at
/// boundary points with finite values (the unit-interval indicator at 1 has
/// [0, +inf)); steep boundaries report -inf ends, matching the empty true
/// subdifferential to h resolution.
struct Subdifferential1D {
    double at = 0.0;
    ExtendedReal lower;
    ExtendedReal upper;
    bool empty = true;

    bool singleton(double tol) const {
        return !empty && lower.finite() && upper.finite() &&
               std::abs(upper.finite_value() - lower.finite_value()) <= tol;
    }
};

Subdifferential1D subdiff_1d(const ConvexFunction& f, double theta, double h = 1e-6);

}  // namespace fenchel
