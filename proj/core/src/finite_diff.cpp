#include "fenchel/finite_diff.hpp"

#include <stdexcept>

namespace fenchel {

namespace {

double stencil_value(const ConvexFunction& f, const Vec& x) {
    const ExtendedReal v = f(x);
    if (!v.finite())
        throw std::domain_error("finite difference: stencil point of '" + f.label() +
                                "' is outside the effective domain");
    return v.finite_value();
}

void check_step(double h) {
    if (!(h > 0.0)) throw std::invalid_argument("finite difference: step must be positive");
}

}  // namespace

Vec grad_fd(const ConvexFunction& f, const Vec& theta, double h) {
    check_step(h);
    if (theta.size() != f.dim()) throw std::invalid_argument("grad_fd: dimension mismatch");
    Vec g(theta.size());
    Vec x = theta;
    for (int i = 0; i < theta.size(); ++i) {
        x[i] = theta[i] + h;
        const double fp = stencil_value(f, x);
        x[i] = theta[i] - h;
        const double fm = stencil_value(f, x);
        x[i] = theta[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

Mat hessian_fd(const ConvexFunction& f, const Vec& theta, double h) {
    check_step(h);
    if (theta.size() != f.dim()) throw std::invalid_argument("hessian_fd: dimension mismatch");
    const int m = static_cast<int>(theta.size());
    Mat hess(m, m);
    const double f0 = stencil_value(f, theta);
    Vec x = theta;
    for (int i = 0; i < m; ++i) {
        x[i] = theta[i] + h;
        const double fp = stencil_value(f, x);
        x[i] = theta[i] - h;
        const double fm = stencil_value(f, x);
        x[i] = theta[i];
        hess(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
        for (int j = i + 1; j < m; ++j) {
            x[i] = theta[i] + h;
            x[j] = theta[j] + h;
            const double fpp = stencil_value(f, x);
            x[j] = theta[j] - h;
            const double fpm = stencil_value(f, x);
            x[i] = theta[i] - h;
            x[j] = theta[j] + h;
            const double fmp = stencil_value(f, x);
            x[j] = theta[j] - h;
            const double fmm = stencil_value(f, x);
            x[i] = theta[i];
            x[j] = theta[j];
            hess(i, j) = hess(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
        }
    }
    return hess;
}

}  // namespace fenchel
