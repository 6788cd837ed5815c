#pragma once

#include <optional>

#include "fenchel/convex_function.hpp"

namespace fenchel {

struct NewtonOptions {
    double tol = 1e-10;            // on ||grad F(theta) - eta||
    int max_iter = 100;
    int max_backtrack = 40;        // residual-halving steps per iteration
    double divergence_radius = 1e12;  // iterates past this radius mean eta is outside the gradient range
};

struct NewtonResult {
    double value;   // <theta, eta> - F(theta) at the solution
    Vec argmax;
    int iterations;
    double residual;
};

/// Evaluates conj(F)(eta) = <theta*, eta> - F(theta*) by solving
/// grad F(theta*) = eta with damped Newton (1D falls back to bisection on
/// the monotone gradient when Newton stalls). Requires a strictly convex f
/// with a gradient; the Hessian is taken analytically when present, by
/// central differences otherwise.
///
/// Throws EngineError: OutOfRange when iterates diverge (eta outside the
/// gradient range), HessianNotSpd, NoConvergence, MissingDerivative.
NewtonResult conjugate_newton(const ConvexFunction& f, const Vec& eta, std::optional<Vec> start = {},
                              const NewtonOptions& opts = {});

}  // namespace fenchel
