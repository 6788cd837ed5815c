#pragma once

#include <optional>
#include <vector>

#include "fenchel/conjugate_pair.hpp"
#include "fenchel/convex_function.hpp"
#include "fenchel/deform_params.hpp"

namespace fenchel {

/// The generalized conjugate lambda * (L F)(E eta + f) + <eta, g> + h, with
/// (L F) supplied by the pair's engine. Extended-real saturation applies
/// (lambda * +inf = +inf); engine failures propagate as EngineError.
ExtendedReal generalized_conjugate(const ConjugatePair& base, const GenParams& p, const Vec& eta);

/// Convenience: builds the base pair from f with the given engine.
ExtendedReal generalized_conjugate(const ConvexFunction& f, const GenParams& p, const Vec& eta, Engine engine,
                                   const PairOptions& opts = {});

struct TheoremProbe {
    Vec eta;
    ExtendedReal lhs;  // generalized conjugate (F*)_P at eta
    ExtendedReal rhs;  // ordinary conjugate of F_{diamond(P)} at eta
    enum class Status { Match, Mismatch, Inconclusive } status = Status::Inconclusive;
    double abs_diff = 0.0;  // finite probes only
};

struct TheoremReport {
    bool pass = false;
    double max_abs_diff = 0.0;
    double tolerance = 0.0;
    int matched = 0;
    int mismatched = 0;
    int inconclusive = 0;
    std::vector<TheoremProbe> probes;
};

struct TheoremCheckOptions {
    int probe_count = 41;
    double tolerance = 1e-9;
    double scan_halfwidth = 10.0;  // candidate window for the finite-domain pre-scan
    int scan_points = 201;         // per axis
    std::optional<GridSpec> grid;  // primal grid for the grid engines
    NewtonOptions newton;
};

/// Verifies L_P F = L(F_{diamond(P)}) pointwise: the left side reads P as
/// dual-side parameters of the generalized transform over the engine's
/// (L F); the right side conjugates deform(f, diamond(P)) with the same
/// engine. Probes are chosen inside the pre-scanned intersection of both
/// sides' finite regions (for indicator-valued conjugates, at the indicator
/// points themselves plus off-point infinity checks). Both sides +inf
/// matches; one side finite against +inf is a hard mismatch; engine errors
/// mark the probe inconclusive.
TheoremReport theorem_check(const ConvexFunction& f, const DeformParams& p, Engine engine,
                            const TheoremCheckOptions& opts = {});

}  // namespace fenchel
