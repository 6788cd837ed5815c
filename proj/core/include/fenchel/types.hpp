#pragma once

#include <Eigen/Dense>

namespace fenchel {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Induced infinity norm (max absolute row sum).
inline double inf_norm(const Mat& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().rowwise().sum().maxCoeff();
}

inline Vec vec1(double x) {
    Vec v(1);
    v[0] = x;
    return v;
}

inline Vec vec2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

/// Symmetric (to relative 1e-12) and positive definite via Cholesky.
inline bool is_spd(const Mat& a) {
    if (a.rows() != a.cols() || a.rows() == 0) return false;
    const double scale = inf_norm(a);
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, scale)) return false;
    Eigen::LLT<Mat> llt(a);
    return llt.info() == Eigen::Success;
}

}  // namespace fenchel
