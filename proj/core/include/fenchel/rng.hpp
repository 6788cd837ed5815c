#pragma once

#include <cstdint>
#include <random>

#include "fenchel/deform_params.hpp"
#include "fenchel/domain.hpp"

namespace fenchel {

/// Seeded generator with platform-independent uniforms (std distributions
/// are implementation-defined; byte-identical CLI artifacts require fixed
/// bit streams).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(uniform() * static_cast<double>(hi - lo + 1));
    }

    std::uint64_t bits() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

struct RandomParamsOptions {
    double entry_lo = -10.0;
    double entry_hi = 10.0;
    double lambda_lo = 0.1;
    double lambda_hi = 10.0;
    double max_cond = 1e3;   // 2-norm condition bound for A (resampled)
    double min_sv = 1e-2;    // smallest singular value floor, keeps ||A^-1|| bounded
};

/// Seeded random valid deformation parameter; A is resampled until it meets
/// the conditioning bounds, so every returned P passes validate().
DeformParams random_deform_params(Rng& rng, int dim, const RandomParamsOptions& opts = {});

/// Uniform point strictly inside a box-like domain: finite bounds are
/// respected with `margin`, infinite directions clamp to +-clamp (or a
/// 2*clamp window above/below a one-sided bound). Domains carrying an
/// affine change of variable are rejected; sample the inner box and map.
Vec random_interior_point(const Domain& domain, Rng& rng, double clamp = 3.0, double margin = 0.05);

}  // namespace fenchel
