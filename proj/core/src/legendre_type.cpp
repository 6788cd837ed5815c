#include "fenchel/legendre_type.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fenchel/rng.hpp"

namespace fenchel {

const char* LegendreTypeReport::status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::TriviallyPass: return "trivially-pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

Vec sample_interior(const ConvexFunction& f, Rng& rng) { return random_interior_point(f.domain(), rng); }

bool spot_check_strict_convexity(const ConvexFunction& f, Rng& rng) {
    int checked = 0;
    for (int it = 0; it < 400 && checked < 60; ++it) {
        const Vec x = sample_interior(f, rng);
        const Vec y = sample_interior(f, rng);
        if ((x - y).norm() < 0.1) continue;
        const ExtendedReal fx = f(x), fy = f(y), fm = f(0.5 * (x + y));
        if (!fx.finite() || !fy.finite() || !fm.finite()) continue;
        const double gap = 0.5 * (fx.finite_value() + fy.finite_value()) - fm.finite_value();
        const double scale = std::max({1.0, std::abs(fx.finite_value()), std::abs(fy.finite_value())});
        if (gap <= 1e-9 * scale) return false;  // midpoint equality: not strictly convex
        ++checked;
    }
    return checked > 0;
}

bool spot_check_differentiability(const ConvexFunction& f, Rng& rng) {
    const double h = 1e-5;
    int checked = 0;
    for (int it = 0; it < 400 && checked < 60; ++it) {
        const Vec x = sample_interior(f, rng);
        bool ok_point = true;
        for (int i = 0; i < f.dim() && ok_point; ++i) {
            Vec xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            const ExtendedReal fp = f(xp), fm = f(xm), f0 = f(x);
            if (!fp.finite() || !fm.finite() || !f0.finite()) {
                ok_point = false;
                continue;
            }
            const double right = (fp.finite_value() - f0.finite_value()) / h;
            const double left = (f0.finite_value() - fm.finite_value()) / h;
            // one-sided slopes must agree to O(h * curvature); a kink jumps O(1)
            if (std::abs(right - left) > 1e-2 * std::max(1.0, std::abs(right) + std::abs(left))) return false;
        }
        if (ok_point) ++checked;
    }
    return checked > 0;
}

RayEvidence probe_ray(const ConvexFunction& f, const Vec& interior, const Vec& boundary, int ray_steps) {
    RayEvidence ev;
    ev.interior = interior;
    ev.boundary = boundary;
    for (int k = 1; k <= ray_steps; ++k) {
        const double lambda = std::pow(10.0, -k);
        const double dl = 0.1 * lambda;
        const Vec xp = (lambda + dl) * interior + (1.0 - lambda - dl) * boundary;
        const Vec xm = (lambda - dl) * interior + (1.0 - lambda + dl) * boundary;
        const ExtendedReal fp = f(xp), fm = f(xm);
        if (!fp.finite() || !fm.finite()) return ev;  // stayed inconclusive
        ev.lambdas.push_back(lambda);
        ev.slopes.push_back((fp.finite_value() - fm.finite_value()) / (2.0 * dl));
    }
    if (static_cast<int>(ev.slopes.size()) < ray_steps) return ev;

    const auto& s = ev.slopes;
    bool decreasing = true;
    for (std::size_t i = 1; i < s.size(); ++i)
        decreasing &= s[i] <= s[i - 1] + 1e-9 * std::max(1.0, std::abs(s[i - 1]));
    const double last = s.back();
    const double first_move = std::abs(s[1] - s[0]);
    const double tail_move = std::abs(s[s.size() - 1] - s[s.size() - 2]);

    // divergence: monotone, well below zero, and the per-decade decrease has
    // not faded (covers both 1/lambda-scale and logarithmic rates)
    if (decreasing && last <= -1.0 && tail_move >= 0.25 * first_move && first_move > 0.0) {
        ev.cls = RayEvidence::Class::Steep;
        return ev;
    }
    // settled: the last refinement barely moves the slope
    if (tail_move <= 0.05 * std::max(1.0, std::abs(last))) {
        ev.cls = RayEvidence::Class::BoundedSlope;
        return ev;
    }
    return ev;
}

}  // namespace

LegendreTypeReport check_legendre_type(const ConvexFunction& f, int boundary_samples, int ray_steps,
                                       std::uint64_t seed) {
    if (f.domain().has_affine_map())
        throw std::invalid_argument("check_legendre_type: requires a plain box/halfspace domain");
    if (f.dim() > 2) throw std::invalid_argument("check_legendre_type: 1D and 2D only");
    if (boundary_samples < 1 || ray_steps < 2)
        throw std::invalid_argument("check_legendre_type: need boundary_samples >= 1, ray_steps >= 2");

    Rng rng(seed);
    LegendreTypeReport report;
    report.strictly_convex_ok = spot_check_strict_convexity(f, rng);
    report.differentiable_ok = spot_check_differentiability(f, rng);
    if (!report.strictly_convex_ok || !report.differentiable_ok) {
        report.status = LegendreTypeReport::Status::Fail;
        report.note = !report.strictly_convex_ok ? "strict convexity spot check failed"
                                                 : "differentiability spot check failed";
        return report;
    }

    if (!f.domain().has_finite_boundary()) {
        report.status = LegendreTypeReport::Status::TriviallyPass;
        report.note = "no finite boundary: the steepness condition is vacuous";
        return report;
    }

    // one ray per sampled boundary point on every finite face
    const auto& dom = f.domain();
    for (int axis = 0; axis < f.dim(); ++axis) {
        for (int side = 0; side < 2; ++side) {
            const double bound = side == 0 ? dom.lower()[axis] : dom.upper()[axis];
            if (!std::isfinite(bound)) continue;
            // free-coordinate values for the boundary point in 2D; 0 is
            // always included (corners are where bounded slopes hide)
            std::vector<double> free_coords{0.0};
            if (f.dim() == 2) {
                for (int s = 0; s < boundary_samples; ++s) {
                    double t = boundary_samples == 1 ? 1.0 : -2.0 + 4.0 * static_cast<double>(s) / (boundary_samples - 1);
                    const int other = 1 - axis;
                    if (std::isfinite(dom.lower()[other])) t = std::max(t, dom.lower()[other]);
                    if (std::isfinite(dom.upper()[other])) t = std::min(t, dom.upper()[other]);
                    free_coords.push_back(t);
                }
            } else {
                for (int s = 1; s < boundary_samples; ++s) free_coords.push_back(0.0);  // 1D: same endpoint, fresh interior
            }
            for (double t : free_coords) {
                const Vec interior = sample_interior(f, rng);
                Vec boundary = interior;
                boundary[axis] = bound;
                if (f.dim() == 2) boundary[1 - axis] = t;
                report.rays.push_back(probe_ray(f, interior, boundary, ray_steps));
            }
        }
    }

    bool any_inconclusive = false, any_bounded = false;
    for (const auto& ray : report.rays) {
        any_inconclusive |= ray.cls == RayEvidence::Class::Inconclusive;
        any_bounded |= ray.cls == RayEvidence::Class::BoundedSlope;
    }
    if (any_inconclusive) {
        report.status = LegendreTypeReport::Status::Inconclusive;
        report.note = "some slope sequences neither diverged nor settled";
    } else if (!any_bounded) {
        report.status = LegendreTypeReport::Status::Pass;
        report.note = "all sampled boundary rays diverge (steep)";
    } else if (f.dim() == 1) {
        report.status = LegendreTypeReport::Status::Pass;
        report.note =
            "bounded boundary slope in 1D: the gradient is still a monotone bijection onto an open interval "
            "(convention; thresholds are an engineering choice, not a proof)";
    } else {
        report.status = LegendreTypeReport::Status::Fail;
        report.note = "bounded boundary slope in dimension >= 2: the gradient range can fail to be convex";
    }
    return report;
}

}  // namespace fenchel
