#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fenchel/convex_function.hpp"

namespace fenchel {

/// Slope evidence along one interior-to-boundary segment: the directional
/// derivative d/dl F(l*interior + (1-l)*boundary) sampled at l = 10^-1 ..
/// 10^-k. "Steep" means monotone divergence below -1/l-scale thresholds;
/// "BoundedSlope" means the sequence settles to a finite limit.
struct RayEvidence {
    Vec interior;
    Vec boundary;
    std::vector<double> lambdas;
    std::vector<double> slopes;
    enum class Class { Steep, BoundedSlope, Inconclusive } cls = Class::Inconclusive;
};

struct LegendreTypeReport {
    enum class Status { Pass, TriviallyPass, Fail, Inconclusive };
    Status status = Status::Inconclusive;
    std::string note;
    bool strictly_convex_ok = false;
    bool differentiable_ok = false;
    std::vector<RayEvidence> rays;

    bool passed() const { return status == Status::Pass || status == Status::TriviallyPass; }
    static const char* status_name(Status s);
};

/// Numeric evidence for the Legendre-type definition: strict convexity and
/// differentiability spot checks on the open domain, plus steepness probes
/// toward every finite boundary face. The limit itself is undecidable
/// numerically, so this grades evidence rather than proving anything:
///   - spot-check failure -> Fail;
///   - no finite boundary -> TriviallyPass;
///   - all rays steep -> Pass;
///   - bounded-slope rays -> Pass in 1D (a strictly convex differentiable 1D
///     function has a monotone gradient bijection onto an open interval,
///     which is what conjugate pairs restricted to half-lines rely on;
///     noted), Fail in higher dimension (bounded boundary gradients are how
///     the Rockafellar bivariate example gets its non-convex gradient range);
///   - noisy/non-monotone slope sequences -> Inconclusive.
LegendreTypeReport check_legendre_type(const ConvexFunction& f, int boundary_samples = 8, int ray_steps = 6,
                                       std::uint64_t seed = 0x5eed);

}  // namespace fenchel
