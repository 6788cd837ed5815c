#pragma once

#include "fenchel/convex_function.hpp"

namespace fenchel {

inline constexpr double kDefaultGradStep = 1e-6;
inline constexpr double kDefaultHessStep = 1e-4;

/// Central-difference gradient, component i = (f(x+h e_i) - f(x-h e_i)) / 2h.
/// Throws std::domain_error if any stencil point leaves the domain or
/// evaluates to +inf.
Vec grad_fd(const ConvexFunction& f, const Vec& theta, double h = kDefaultGradStep);

/// Central second-difference Hessian, symmetrized. Uses a wider default step
/// than the gradient: second differences lose half the significant digits.
Mat hessian_fd(const ConvexFunction& f, const Vec& theta, double h = kDefaultHessStep);

}  // namespace fenchel
