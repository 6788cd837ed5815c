#include "fenchel/deform.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

#include "fenchel/catalog.hpp"

namespace fenchel {

namespace {

ConvexFunction deform_generic(const ConvexFunction& f, const DeformParams& p) {
    const Mat a = p.a;
    const Vec b = p.b;
    const Vec c = p.c;
    const double lambda = p.lambda;
    const double d = p.d;

    // Capture f by value: ConvexFunction is immutable, copies share closures.
    auto inner = std::make_shared<const ConvexFunction>(f);

    Domain domain = f.domain().affine_preimage(a, b);

    ConvexFunction::Evaluator eval = [inner, a, b, c, lambda, d](const Vec& t) {
        const ExtendedReal base = (*inner)(a * t + b);
        // base can be +inf for indicator-like inner functions
        return (base.scaled_by(lambda) + ExtendedReal(c.dot(t) + d)).as_double();
    };

    std::optional<ConvexFunction::Gradient> grad;
    if (f.has_gradient()) {
        grad = [inner, a, b, c, lambda](const Vec& t) -> Vec {
            return lambda * (a.transpose() * inner->gradient(a * t + b)) + c;
        };
    }
    std::optional<ConvexFunction::Hessian> hess;
    if (f.has_hessian()) {
        hess = [inner, a, b, lambda](const Vec& t) -> Mat {
            return lambda * (a.transpose() * inner->hessian(a * t + b) * a);
        };
    }

    const Mat a_inv = a.partialPivLu().inverse();
    std::vector<BoundaryOverride> overrides;
    for (const auto& o : f.overrides()) {
        const Vec pt = a_inv * (o.point - b);
        overrides.push_back({pt, lambda * o.value + c.dot(pt) + d});
    }
    std::optional<Vec> hint;
    if (f.interior_hint()) hint = a_inv * (*f.interior_hint() - b);

    ConvexFunction::Traits tr = f.traits();  // affine deformation preserves all four traits

    return ConvexFunction(f.label() + ".deformed", std::move(domain), std::move(eval), std::move(grad),
                          std::move(hess), tr, std::move(overrides), std::move(hint));
}

}  // namespace

ConvexFunction deform(const ConvexFunction& f, const DeformParams& p) {
    p.validate();
    if (p.dim() != f.dim()) throw std::invalid_argument("deform: parameter dimension does not match the function");
    if (p.is_identity()) return f;

    if (f.form()) {
        if (const auto* q = std::get_if<QuadraticForm>(&*f.form())) {
            // 0.5 (At+b)^T Q (At+b) + r^T(At+b) + s, scaled and tilted
            Mat q2 = p.lambda * (p.a.transpose() * q->q * p.a);
            q2 = 0.5 * (q2 + q2.transpose());  // keep exactly symmetric under rounding
            Vec r2 = p.lambda * (p.a.transpose() * (q->q * p.b + q->r)) + p.c;
            const double s2 = p.lambda * (0.5 * p.b.dot(q->q * p.b) + q->r.dot(p.b) + q->s) + p.d;
            return make_quadratic(std::move(q2), std::move(r2), s2);
        }
        if (const auto* af = std::get_if<AffineForm>(&*f.form())) {
            Vec a2 = p.lambda * (p.a.transpose() * af->a) + p.c;
            const double b2 = p.lambda * (af->a.dot(p.b) + af->b) + p.d;
            return make_affine(std::move(a2), b2);
        }
        if (const auto* pi = std::get_if<PointIndicatorForm>(&*f.form())) {
            const Vec at = p.a.partialPivLu().solve(pi->at - p.b);
            return make_point_indicator(at, p.lambda * pi->value + p.c.dot(at) + p.d);
        }
    }
    return deform_generic(f, p);
}

Vec grad_deformed_conjugate(const std::function<Vec(const Vec&)>& grad_conj, const DeformParams& p, const Vec& eta) {
    p.validate();
    if (eta.size() != p.dim()) throw std::invalid_argument("grad_deformed_conjugate: dimension mismatch");
    const Vec w = (p.a.transpose().partialPivLu().solve(eta - p.c)) / p.lambda;
    return p.a.partialPivLu().solve(grad_conj(w) - p.b);
}

}  // namespace fenchel
