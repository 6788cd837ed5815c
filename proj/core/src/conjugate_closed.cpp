#include "fenchel/conjugate_closed.hpp"

#include <cmath>

#include "fenchel/catalog.hpp"
#include "fenchel/errors.hpp"

namespace fenchel {

namespace {

struct Rules {
    ConvexFunction operator()(const QuadraticForm& f) const {
        // conj(0.5 t Q t + r t + s) = 0.5 (e-r) Q^-1 (e-r) - s
        const Eigen::LLT<Mat> llt(f.q);
        Mat q_inv = llt.solve(Mat::Identity(f.q.rows(), f.q.cols()));
        q_inv = 0.5 * (q_inv + q_inv.transpose());
        Vec r2 = -(q_inv * f.r);
        const double s2 = 0.5 * f.r.dot(q_inv * f.r) - f.s;
        return make_quadratic(std::move(q_inv), std::move(r2), s2);
    }
    ConvexFunction operator()(const AffineForm& f) const { return make_point_indicator(f.a, -f.b); }
    ConvexFunction operator()(const PointIndicatorForm& f) const { return make_affine(f.at, -f.value); }
    ConvexFunction operator()(const PowerNormForm& f) const {
        if (f.p > 1.0) {
            const double q = f.p / (f.p - 1.0);
            return make_power_norm(q, f.dim);
        }
        // conj(|t|) is the indicator of [-1, 1]; box-representable only in 1D
        if (f.dim == 1) return make_interval_indicator(-1.0, 1.0);
        throw EngineError(EngineError::Reason::NoClosedForm,
                          "conjugate_closed: no rule for power-norm p=1 above one dimension");
    }
    ConvexFunction operator()(const ExpForm&) const { return make_entropy(); }
    ConvexFunction operator()(const EntropyForm&) const { return make_exp(); }
    ConvexFunction operator()(const ExpAbsForm& f) const { return make_exp_abs_conj(f.restricted); }
    ConvexFunction operator()(const ExpAbsConjForm& f) const { return make_exp_abs(f.restricted); }
    ConvexFunction operator()(const NegLogForm&) const { return make_neg_log_conj(); }
    ConvexFunction operator()(const NegLogConjForm&) const { return make_neg_log(); }
    ConvexFunction operator()(const IntervalIndicatorForm& f) const {
        if (f.lo == -1.0 && f.hi == 1.0) return make_power_norm(1.0, 1);
        throw EngineError(EngineError::Reason::NoClosedForm,
                          "conjugate_closed: no rule for a general interval indicator");
    }
    ConvexFunction operator()(const RockafellarForm&) const {
        throw EngineError(EngineError::Reason::NoClosedForm, "conjugate_closed: no rule for rockafellar-2d");
    }
};

}  // namespace

ConvexFunction conjugate_closed(const ConvexFunction& f) {
    if (!f.form())
        throw EngineError(EngineError::Reason::NoClosedForm,
                          "conjugate_closed: '" + f.label() + "' carries no closed-form family");
    return std::visit(Rules{}, *f.form());
}

bool has_closed_conjugate(const ConvexFunction& f) {
    if (!f.form()) return false;
    try {
        (void)conjugate_closed(f);
        return true;
    } catch (const EngineError&) {
        return false;
    }
}

}  // namespace fenchel
