#pragma once

#include <string>
#include <vector>

#include "fenchel/fenchel.hpp"

namespace fenchel::test {

/// Catalog entries used by the property sweeps, with sensible sampling
/// windows for random interior points.
inline std::vector<ConvexFunction> smooth_catalog_1d() {
    std::vector<ConvexFunction> fns;
    fns.push_back(make_exp());
    fns.push_back(make_quadratic(Mat::Constant(1, 1, 1.0), Vec::Zero(1), 0.0));
    fns.push_back(make_power_norm(1.5, 1));
    fns.push_back(make_power_norm(3.0, 1));
    fns.push_back(make_exp_abs(false));
    fns.push_back(make_exp_abs(true));
    fns.push_back(make_neg_log());
    return fns;
}

inline Mat spd_2x2() {
    Mat q(2, 2);
    q << 2.0, 0.5, 0.5, 1.0;
    return q;
}

}  // namespace fenchel::test
