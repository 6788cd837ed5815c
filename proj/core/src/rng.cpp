#include "fenchel/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace fenchel {

Vec random_interior_point(const Domain& domain, Rng& rng, double clamp, double margin) {
    if (domain.has_affine_map())
        throw std::invalid_argument("random_interior_point: domain carries an affine map; sample the inner box");
    Vec x(domain.dim());
    for (int i = 0; i < domain.dim(); ++i) {
        const bool lo_finite = std::isfinite(domain.lower()[i]);
        const bool hi_finite = std::isfinite(domain.upper()[i]);
        double lo, hi;
        if (lo_finite && hi_finite) {
            lo = domain.lower()[i] + margin;
            hi = domain.upper()[i] - margin;
            if (!(lo < hi)) {
                const double mid = 0.5 * (domain.lower()[i] + domain.upper()[i]);
                lo = mid;
                hi = mid + 0.25 * (domain.upper()[i] - domain.lower()[i]);
            }
        } else if (lo_finite) {
            lo = domain.lower()[i] + margin;
            hi = domain.lower()[i] + 2.0 * clamp;
        } else if (hi_finite) {
            hi = domain.upper()[i] - margin;
            lo = domain.upper()[i] - 2.0 * clamp;
        } else {
            lo = -clamp;
            hi = clamp;
        }
        x[i] = rng.uniform(lo, hi);
    }
    return x;
}

DeformParams random_deform_params(Rng& rng, int dim, const RandomParamsOptions& opts) {
    if (dim < 1) throw std::invalid_argument("random_deform_params: dimension must be positive");
    DeformParams p;
    p.lambda = rng.uniform(opts.lambda_lo, opts.lambda_hi);
    p.b = Vec(dim);
    p.c = Vec(dim);
    for (int i = 0; i < dim; ++i) {
        p.b[i] = rng.uniform(opts.entry_lo, opts.entry_hi);
        p.c[i] = rng.uniform(opts.entry_lo, opts.entry_hi);
    }
    p.d = rng.uniform(opts.entry_lo, opts.entry_hi);

    for (int attempt = 0; attempt < 10000; ++attempt) {
        Mat a(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) a(i, j) = rng.uniform(opts.entry_lo, opts.entry_hi);
        Eigen::JacobiSVD<Mat> svd(a);
        const double smax = svd.singularValues().maxCoeff();
        const double smin = svd.singularValues().minCoeff();
        if (smin >= opts.min_sv && smax <= opts.max_cond * smin) {
            p.a = std::move(a);
            p.validate();
            return p;
        }
    }
    throw std::runtime_error("random_deform_params: could not draw a well-conditioned matrix");
}

}  // namespace fenchel
