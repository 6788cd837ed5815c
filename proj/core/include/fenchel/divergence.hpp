#pragma once

#include <string>

#include "fenchel/conjugate_pair.hpp"
#include "fenchel/convex_function.hpp"
#include "fenchel/deform_params.hpp"

namespace fenchel {

/// A point carried in both coordinate systems: theta (primal) and
/// eta = grad F(theta) (dual). `consistent` records whether the pairing
/// holds to 1e-6.
struct DualPoint {
    Vec theta;
    Vec eta;
    bool consistent = false;
};

/// Links theta with eta via the gradient of f (analytic when available,
/// central differences otherwise).
DualPoint make_dual_point(const ConvexFunction& f, const Vec& theta);

/// Links eta with theta via the gradient of the conjugate.
DualPoint make_dual_point_from_eta(const ConvexFunction& f_star, const Vec& eta);

/// B_F(theta : theta') = F(theta) - F(theta') - <theta - theta', grad F(theta')>.
double bregman(const ConvexFunction& f, const Vec& theta, const Vec& theta_prime);

/// Y_{F,F*}(theta : eta') = F(theta) + F*(eta') - <theta, eta'>.
double fenchel_young(const ConvexFunction& f, const ConvexFunction& f_star, const Vec& theta, const Vec& eta_prime);

/// The canonical divergence of the dually flat structure in mixed
/// coordinates: equals fenchel_young(F, F*, theta(p), eta(q)). Requires
/// consistent DualPoints.
double flat_divergence(const ConjugatePair& pair, const DualPoint& p, const DualPoint& q);

/// Central second-difference Hessian metric g = hess F, symmetrized.
Mat hessian_metric(const ConvexFunction& f, const Vec& theta, double h = 1e-4);

/// The three equivalent divergence evaluations for one input pair, with the
/// coordinates used. bregman_dual is B_{F*}(eta' : eta).
struct DivergenceReport {
    double bregman_primal = 0.0;
    double bregman_dual = 0.0;
    double fenchel_young = 0.0;
    Vec theta, theta_prime, eta, eta_prime;
    std::string gradient_path;  // "analytic" or "finite-difference"
};

DivergenceReport divergence_report(const ConjugatePair& pair, const Vec& theta, const Vec& theta_prime);

/// The 1/lambda affine-invariance identity: D_{g,grad}(p:q) against
/// (1/lambda) Y_{F_P, (F*)_{diamond(P)}} (theta_bar(p) : eta_bar(q)) with
/// theta_bar = A^-1(theta - b) and eta_bar = grad(F_P)(theta_bar).
struct InvarianceReport {
    double lhs = 0.0;         // Y_{F,F*} in the undeformed coordinates
    double rhs_scaled = 0.0;  // (1/lambda) * deformed Fenchel-Young
    double abs_diff = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

InvarianceReport invariance_check(const ConvexFunction& f, const ConvexFunction& f_star, const DeformParams& p,
                                  const DualPoint& point_p, const DualPoint& point_q, double tol = 1e-9);

}  // namespace fenchel
