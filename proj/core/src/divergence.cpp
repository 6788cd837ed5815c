#include "fenchel/divergence.hpp"

#include <cmath>
#include <stdexcept>

#include "fenchel/deform.hpp"
#include "fenchel/finite_diff.hpp"

namespace fenchel {

namespace {

Vec gradient_of(const ConvexFunction& f, const Vec& x) {
    return f.has_gradient() ? f.gradient(x) : grad_fd(f, x);
}

double finite_at(const ConvexFunction& f, const Vec& x, const char* who) {
    const ExtendedReal v = f(x);
    if (!v.finite()) throw std::domain_error(std::string(who) + ": point is outside the effective domain");
    return v.finite_value();
}

void check_consistent(const DualPoint& p, const char* who) {
    if (!p.consistent) throw std::invalid_argument(std::string(who) + ": DualPoint coordinates are not linked");
}

}  // namespace

DualPoint make_dual_point(const ConvexFunction& f, const Vec& theta) {
    DualPoint p;
    p.theta = theta;
    p.eta = gradient_of(f, theta);
    p.consistent = true;
    return p;
}

DualPoint make_dual_point_from_eta(const ConvexFunction& f_star, const Vec& eta) {
    DualPoint p;
    p.eta = eta;
    p.theta = gradient_of(f_star, eta);
    p.consistent = true;
    return p;
}

double bregman(const ConvexFunction& f, const Vec& theta, const Vec& theta_prime) {
    const double f_t = finite_at(f, theta, "bregman");
    const double f_tp = finite_at(f, theta_prime, "bregman");
    const Vec g = gradient_of(f, theta_prime);
    return f_t - f_tp - (theta - theta_prime).dot(g);
}

double fenchel_young(const ConvexFunction& f, const ConvexFunction& f_star, const Vec& theta,
                     const Vec& eta_prime) {
    const double f_t = finite_at(f, theta, "fenchel_young");
    const double fs_e = finite_at(f_star, eta_prime, "fenchel_young");
    return f_t + fs_e - theta.dot(eta_prime);
}

double flat_divergence(const ConjugatePair& pair, const DualPoint& p, const DualPoint& q) {
    check_consistent(p, "flat_divergence");
    check_consistent(q, "flat_divergence");
    return fenchel_young(pair.primal, pair.dual, p.theta, q.eta);
}

Mat hessian_metric(const ConvexFunction& f, const Vec& theta, double h) {
    Mat g = hessian_fd(f, theta, h);
    return 0.5 * (g + g.transpose());
}

DivergenceReport divergence_report(const ConjugatePair& pair, const Vec& theta, const Vec& theta_prime) {
    DivergenceReport r;
    r.theta = theta;
    r.theta_prime = theta_prime;
    r.gradient_path = pair.primal.has_gradient() ? "analytic" : "finite-difference";
    r.eta = gradient_of(pair.primal, theta);
    r.eta_prime = gradient_of(pair.primal, theta_prime);
    r.bregman_primal = bregman(pair.primal, theta, theta_prime);
    r.bregman_dual = bregman(pair.dual, r.eta_prime, r.eta);
    r.fenchel_young = fenchel_young(pair.primal, pair.dual, theta, r.eta_prime);
    return r;
}

InvarianceReport invariance_check(const ConvexFunction& f, const ConvexFunction& f_star, const DeformParams& p,
                                  const DualPoint& point_p, const DualPoint& point_q, double tol) {
    p.validate();
    check_consistent(point_p, "invariance_check");
    check_consistent(point_q, "invariance_check");

    InvarianceReport report;
    report.tolerance = tol;
    report.lhs = fenchel_young(f, f_star, point_p.theta, point_q.eta);

    const ConvexFunction f_p = deform(f, p);
    const ConvexFunction f_star_pd = deform(f_star, diamond(p));

    const auto lu = p.a.partialPivLu();
    const Vec theta_bar_p = lu.solve(point_p.theta - p.b);
    const Vec theta_bar_q = lu.solve(point_q.theta - p.b);
    // dual coordinate under the deformed potential, via the composed gradient
    const Vec eta_bar_q = f_p.has_gradient() ? f_p.gradient(theta_bar_q) : grad_fd(f_p, theta_bar_q);

    const double y = fenchel_young(f_p, f_star_pd, theta_bar_p, eta_bar_q);
    report.rhs_scaled = y / p.lambda;
    report.abs_diff = std::abs(report.lhs - report.rhs_scaled);
    report.pass = report.abs_diff <= tol;
    return report;
}

}  // namespace fenchel
