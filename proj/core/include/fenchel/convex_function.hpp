#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fenchel/domain.hpp"
#include "fenchel/extended_real.hpp"
#include "fenchel/function_forms.hpp"
#include "fenchel/types.hpp"

namespace fenchel {

/// Explicit lower-semicontinuous closure value at a boundary point of the
/// open domain (e.g. the entropy conjugate takes 0 at eta = 0). The generic
/// evaluator cannot infer limits, so these are declared per function.
struct BoundaryOverride {
    Vec point;
    double value;
};

/// Class flags for a function: smooth and legendre_type mark the
/// differentiable and Legendre-type subclasses used by the checkers.
struct FunctionTraits {
    bool convex = true;
    bool strictly_convex = false;
    bool smooth = false;         // differentiable on the open domain
    bool legendre_type = false;  // smooth, strictly convex, steep at any finite boundary
};

/// Evaluatable extended-real convex function with optional analytic gradient
/// and Hessian, a declared open effective domain and boundary overrides.
///
/// Immutable after construction; evaluation is pure, so instances may be
/// shared freely across threads.
class ConvexFunction {
public:
    /// Formula on the open domain. May return +inf (indicator-like entries);
    /// must never return NaN or -inf for points inside the domain.
    using Evaluator = std::function<double(const Vec&)>;
    using Gradient = std::function<Vec(const Vec&)>;
    using Hessian = std::function<Mat(const Vec&)>;
    using Traits = FunctionTraits;

    ConvexFunction(std::string label, Domain domain, Evaluator evaluate, std::optional<Gradient> gradient = {},
                   std::optional<Hessian> hessian = {}, Traits traits = Traits(),
                   std::vector<BoundaryOverride> overrides = {}, std::optional<Vec> interior_hint = {},
                   std::optional<FunctionForm> form = {})
        : label_(std::move(label)),
          domain_(std::move(domain)),
          eval_(std::move(evaluate)),
          grad_(std::move(gradient)),
          hess_(std::move(hessian)),
          traits_(traits),
          overrides_(std::move(overrides)),
          interior_hint_(std::move(interior_hint)),
          form_(std::move(form)) {
        if (!eval_) throw std::invalid_argument("ConvexFunction: evaluator is required");
        for (const auto& o : overrides_)
            if (o.point.size() != domain_.dim())
                throw std::invalid_argument("ConvexFunction: override dimension mismatch");
    }

    const std::string& label() const { return label_; }
    const Domain& domain() const { return domain_; }
    int dim() const { return domain_.dim(); }
    const Traits& traits() const { return traits_; }
    const std::vector<BoundaryOverride>& overrides() const { return overrides_; }
    const std::optional<Vec>& interior_hint() const { return interior_hint_; }
    const std::optional<FunctionForm>& form() const { return form_; }

    bool has_gradient() const { return grad_.has_value(); }
    bool has_hessian() const { return hess_.has_value(); }

    /// Extended-real evaluation: override values at their (boundary) points,
    /// +inf outside the open domain, the formula inside.
    ExtendedReal operator()(const Vec& theta) const {
        if (theta.size() != dim()) throw std::invalid_argument("ConvexFunction: point dimension mismatch");
        for (const auto& o : overrides_)
            if (snaps_to(theta, o.point)) return ExtendedReal(o.value);
        if (!domain_.contains(theta)) return ExtendedReal::pos_inf();
        const double v = eval_(theta);
        if (std::isnan(v) || v == -std::numeric_limits<double>::infinity())
            throw std::domain_error("ConvexFunction '" + label_ + "': evaluator produced " +
                                    (std::isnan(v) ? std::string("NaN") : std::string("-inf")) +
                                    " inside the domain");
        return ExtendedReal(v);
    }

    Vec gradient(const Vec& theta) const {
        require(grad_.has_value(), "no analytic gradient");
        require_inside(theta);
        return (*grad_)(theta);
    }

    Mat hessian(const Vec& theta) const {
        require(hess_.has_value(), "no analytic hessian");
        require_inside(theta);
        return (*hess_)(theta);
    }

private:
    static bool snaps_to(const Vec& x, const Vec& p) {
        for (int i = 0; i < x.size(); ++i)
            if (std::abs(x[i] - p[i]) > 1e-12 * std::max(1.0, std::abs(p[i]))) return false;
        return true;
    }

    void require(bool cond, const char* what) const {
        if (!cond) throw std::logic_error("ConvexFunction '" + label_ + "': " + what);
    }

    void require_inside(const Vec& theta) const {
        if (theta.size() != dim()) throw std::invalid_argument("ConvexFunction: point dimension mismatch");
        if (!domain_.contains(theta))
            throw std::domain_error("ConvexFunction '" + label_ + "': derivative request outside the open domain");
    }

    std::string label_;
    Domain domain_;
    Evaluator eval_;
    std::optional<Gradient> grad_;
    std::optional<Hessian> hess_;
    Traits traits_;
    std::vector<BoundaryOverride> overrides_;
    std::optional<Vec> interior_hint_;
    std::optional<FunctionForm> form_;
};

/// eval operation from the spec surface; identical to operator().
inline ExtendedReal eval(const ConvexFunction& f, const Vec& theta) { return f(theta); }

}  // namespace fenchel
