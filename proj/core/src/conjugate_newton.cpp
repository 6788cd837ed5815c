#include "fenchel/conjugate_newton.hpp"

#include <cmath>
#include <limits>

#include "fenchel/errors.hpp"
#include "fenchel/finite_diff.hpp"

namespace fenchel {

namespace {

double finite_eval(const ConvexFunction& f, const Vec& x) {
    const ExtendedReal v = f(x);
    if (!v.finite())
        throw EngineError(EngineError::Reason::NoConvergence,
                          "conjugate_newton: iterate left the effective domain of '" + f.label() + "'");
    return v.finite_value();
}

NewtonResult finish(const ConvexFunction& f, const Vec& eta, const Vec& theta, int iters, double residual) {
    const double value = theta.dot(eta) - finite_eval(f, theta);
    return NewtonResult{value, theta, iters, residual};
}

[[noreturn]] void out_of_range(const std::string& why) {
    throw EngineError(EngineError::Reason::OutOfRange, "conjugate_newton: " + why);
}

/// Bisection on the monotone 1D gradient; rescues Newton when damping stalls
/// (e.g. Hessian blow-up near a power-norm kink).
NewtonResult bisect_1d(const ConvexFunction& f, const Vec& eta, double x0, const NewtonOptions& opts) {
    const double target = eta[0];
    auto slope = [&](double x) { return f.gradient(vec1(x))[0]; };
    auto inside = [&](double x) { return f.domain().contains(vec1(x)); };

    // expand a bracket [lo, hi] with slope(lo) <= target <= slope(hi);
    // domain boundaries are approached geometrically, never crossed
    auto expand = [&](double from, int dir) -> double {
        double x = from, step = 1.0;
        for (int it = 0; it < 500; ++it) {
            const double s = slope(x);
            if ((dir < 0 && s <= target) || (dir > 0 && s >= target)) return x;
            double cand = x + dir * step;
            while (!inside(cand)) {
                step *= 0.5;
                if (step < 1e-300) out_of_range("target slope unreachable before the domain boundary");
                cand = x + dir * step;
            }
            x = cand;
            step *= 2.0;
            if (std::abs(x) > opts.divergence_radius)
                out_of_range("iterates diverged; eta is outside the gradient range");
        }
        out_of_range("bracket expansion did not terminate");
    };

    double lo = expand(x0, -1);
    double hi = expand(lo, +1);
    double best = lo, best_res = std::abs(slope(lo) - target);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double r = slope(mid) - target;
        if (std::abs(r) < best_res) {
            best = mid;
            best_res = std::abs(r);
        }
        if (std::abs(r) <= opts.tol) return finish(f, eta, vec1(mid), it, std::abs(r));
        (r < 0 ? lo : hi) = mid;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max({1.0, std::abs(lo), std::abs(hi)}))
            break;
    }
    // bracket collapsed; accept if the slope matches to a relaxed relative
    // band (the value error is quadratically smaller than the residual)
    if (best_res <= 1e-7 * std::max(1.0, std::abs(target))) return finish(f, eta, vec1(best), 200, best_res);
    throw EngineError(EngineError::Reason::NoConvergence, "conjugate_newton: bisection stalled at residual " +
                                                              std::to_string(best_res));
}

}  // namespace

NewtonResult conjugate_newton(const ConvexFunction& f, const Vec& eta, std::optional<Vec> start,
                              const NewtonOptions& opts) {
    if (eta.size() != f.dim()) throw std::invalid_argument("conjugate_newton: dimension mismatch");
    if (!eta.allFinite()) throw std::invalid_argument("conjugate_newton: eta must be finite");
    if (!f.has_gradient())
        throw EngineError(EngineError::Reason::MissingDerivative,
                          "conjugate_newton: '" + f.label() + "' has no gradient");

    Vec theta;
    if (start) {
        theta = *start;
    } else if (f.interior_hint()) {
        theta = *f.interior_hint();
    } else {
        theta = Vec::Zero(f.dim());
    }
    if (!f.domain().contains(theta))
        throw std::invalid_argument("conjugate_newton: start point is not interior");

    auto hess_at = [&](const Vec& x) -> Mat { return f.has_hessian() ? f.hessian(x) : hessian_fd(f, x); };

    Vec r = f.gradient(theta) - eta;
    int stagnant = 0;
    for (int it = 0; it < opts.max_iter; ++it) {
        const double rn = r.norm();
        if (rn <= opts.tol) return finish(f, eta, theta, it, rn);

        Mat h;
        try {
            h = hess_at(theta);
        } catch (const std::exception& e) {
            if (f.dim() == 1) return bisect_1d(f, eta, theta[0], opts);
            throw EngineError(EngineError::Reason::NoConvergence,
                              std::string("conjugate_newton: Hessian evaluation failed: ") + e.what());
        }
        Eigen::LLT<Mat> llt(h);
        if (llt.info() != Eigen::Success) {
            if (f.dim() == 1) return bisect_1d(f, eta, theta[0], opts);
            throw EngineError(EngineError::Reason::HessianNotSpd,
                              "conjugate_newton: Hessian is not SPD at an iterate");
        }
        const Vec step = llt.solve(-r);

        double t = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < opts.max_backtrack; ++bt, t *= 0.5) {
            const Vec cand = theta + t * step;
            if (!f.domain().contains(cand)) continue;
            Vec rc;
            try {
                rc = f.gradient(cand) - eta;
            } catch (const std::exception&) {
                continue;
            }
            if (rc.norm() < rn) {
                stagnant = rc.norm() > 0.95 * rn ? stagnant + 1 : 0;
                theta = cand;
                r = rc;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            if (f.dim() == 1) return bisect_1d(f, eta, theta[0], opts);
            throw EngineError(EngineError::Reason::NoConvergence,
                              "conjugate_newton: damping exhausted without residual decrease");
        }
        if (theta.norm() > opts.divergence_radius)
            out_of_range("iterates diverged; eta is outside the gradient range");
        if (stagnant >= 12) out_of_range("residual stagnated above zero; eta appears outside the gradient range");
    }
    if (f.dim() == 1) return bisect_1d(f, eta, theta[0], opts);
    throw EngineError(EngineError::Reason::NoConvergence, "conjugate_newton: iteration budget exhausted");
}

}  // namespace fenchel
