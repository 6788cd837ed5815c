#pragma once

#include <functional>

#include "fenchel/convex_function.hpp"
#include "fenchel/deform_params.hpp"

namespace fenchel {

/// F_P(theta) = lambda F(A theta + b) + <theta, c> + d.
///
/// The effective domain is the affine preimage of dom(F). When F carries a
/// quadratic/affine/point-indicator closed form the result stays in that
/// family with exactly transformed parameters (this keeps the closed-form
/// conjugation pipeline closed under deformation); otherwise the evaluator,
/// gradient (lambda A^T grad F(A theta + b) + c), Hessian and boundary
/// overrides are composed generically. Identity parameters return f
/// unchanged.
ConvexFunction deform(const ConvexFunction& f, const DeformParams& p);

/// Gradient of conj(F_P) at eta, given the gradient map of conj(F):
/// A^-1 (grad_conj((1/lambda) A^-T (eta - c)) - b). Solves
/// grad(F_P)(result) = eta.
Vec grad_deformed_conjugate(const std::function<Vec(const Vec&)>& grad_conj, const DeformParams& p, const Vec& eta);

}  // namespace fenchel
