#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fenchel/grid_function.hpp"

namespace fenchel {

/// Discrete conjugate on a dual grid, with the attaining primal node
/// recorded per dual node (flat index into the primal grid).
struct DualGrid {
    GridFunction values;
    std::vector<std::size_t> argmax;
};

/// Discretized sup of Eq-style conjugation: for every dual node eta,
/// max over finite primal nodes theta of <theta,eta> - g(theta). Ties break
/// toward the lexicographically smallest theta. This is the oracle engine.
DualGrid conjugate_grid_brute(const GridFunction& g, const std::vector<std::vector<double>>& dual_axes);
DualGrid conjugate_grid_brute(const GridFunction& g, const GridSpec& dual_axes);

/// 1D transform exploiting the monotone argmax: divide-and-conquer over
/// dual nodes whose inner scan is the same code path as the brute engine on
/// index subranges, so values and argmax are bit-identical to
/// conjugate_grid_brute by construction. O((n + k) log k) worst case.
DualGrid conjugate_grid_fast(const GridFunction& g, const std::vector<std::vector<double>>& dual_axes);
DualGrid conjugate_grid_fast(const GridFunction& g, const GridSpec& dual_axes);

/// The discrete sup at a single (not necessarily gridded) dual point.
std::pair<double, std::size_t> grid_sup(const GridFunction& g, const Vec& eta);

/// Dual axes for biconjugation: per axis, the span [min slope, max slope]
/// over adjacent finite node pairs, same node count as the primal axis.
/// Degenerate spans widen by 0.5 per side; axes with no finite adjacent
/// pair fall back to [-1, 1].
std::vector<std::vector<double>> auto_dual_axes(const GridFunction& g);

/// Applies the grid conjugate twice (dual axes auto-chosen, then back onto
/// the original primal axes). Result is <= g everywhere up to rounding and
/// reproduces g at nodes where g sampled a convex function. A grid with a
/// single finite node is returned unchanged (its conjugate is globally
/// affine and the exact biconjugate is the original point indicator).
GridFunction biconjugate_grid(const GridFunction& g);

struct ReverseOrderReport {
    bool premise_holds = false;    // f2 <= f1 at every primal node
    std::size_t violations = 0;    // dual nodes with conj(f2) < conj(f1) - tol
    double worst_gap = 0.0;        // max over duals of conj(f1) - conj(f2); > tol means violation
    std::optional<Vec> witness;    // dual node attaining worst_gap
    double tolerance = 1e-12;
    bool pass() const { return !premise_holds || violations == 0; }
};

/// Checks the reverse-ordering implication on grids: when f2 <= f1 at every
/// node, conj(f2) >= conj(f1) - tol must hold at every dual node.
ReverseOrderReport check_reverse_order(const GridFunction& f1, const GridFunction& f2,
                                       const std::vector<std::vector<double>>& dual_axes, double tol = 1e-12);
ReverseOrderReport check_reverse_order(const GridFunction& f1, const GridFunction& f2, const GridSpec& dual_axes,
                                       double tol = 1e-12);

}  // namespace fenchel
