#include "fenchel/conjugate_pair.hpp"

#include <memory>
#include <stdexcept>

#include "fenchel/conjugate_closed.hpp"
#include "fenchel/conjugate_grid.hpp"
#include "fenchel/errors.hpp"

namespace fenchel {

Engine parse_engine(const std::string& name) {
    if (name == "closed") return Engine::Closed;
    if (name == "newton") return Engine::Newton;
    if (name == "grid-brute") return Engine::GridBrute;
    if (name == "grid-fast") return Engine::GridFast;
    throw std::invalid_argument("unknown engine '" + name + "' (closed, newton, grid-brute, grid-fast)");
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Closed: return "closed";
        case Engine::Newton: return "newton";
        case Engine::GridBrute: return "grid-brute";
        case Engine::GridFast: return "grid-fast";
    }
    return "?";
}

namespace {

ConvexFunction make_newton_dual(const ConvexFunction& f, const NewtonOptions& newton) {
    auto inner = std::make_shared<const ConvexFunction>(f);
    ConvexFunction::Evaluator eval = [inner, newton](const Vec& eta) {
        return conjugate_newton(*inner, eta, {}, newton).value;
    };
    ConvexFunction::Gradient grad = [inner, newton](const Vec& eta) -> Vec {
        return conjugate_newton(*inner, eta, {}, newton).argmax;
    };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = false, .smooth = false, .legendre_type = false};
    return ConvexFunction(f.label() + "*[newton]", Domain::all(f.dim()), std::move(eval), std::move(grad), {}, tr);
}

ConvexFunction make_grid_dual(const ConvexFunction& f, const GridSpec& spec) {
    auto samples = std::make_shared<const GridFunction>(sample(f, spec));

    // finite bounding box per axis: a sup attained there means out-of-range
    const int dim = samples->dim();
    std::vector<std::size_t> lo_finite(dim, 0), hi_finite(dim, 0);
    bool first = true;
    for (std::size_t i = 0; i < samples->size(); ++i) {
        if (!samples->value(i).finite()) continue;
        const std::size_t i0 = dim == 1 ? i : i / samples->extent(1);
        const std::size_t i1 = dim == 1 ? 0 : i % samples->extent(1);
        const std::size_t idx[2] = {i0, i1};
        for (int k = 0; k < dim; ++k) {
            lo_finite[k] = first ? idx[k] : std::min(lo_finite[k], idx[k]);
            hi_finite[k] = first ? idx[k] : std::max(hi_finite[k], idx[k]);
        }
        first = false;
    }
    const bool single_finite = samples->count_finite() == 1;

    ConvexFunction::Evaluator eval = [samples, lo_finite, hi_finite, single_finite, dim](const Vec& eta) {
        const auto [value, arg] = grid_sup(*samples, eta);
        if (!single_finite) {
            const std::size_t i0 = dim == 1 ? arg : arg / samples->extent(1);
            const std::size_t i1 = dim == 1 ? 0 : arg % samples->extent(1);
            const std::size_t idx[2] = {i0, i1};
            for (int k = 0; k < dim; ++k) {
                if (idx[k] == lo_finite[k] || idx[k] == hi_finite[k])
                    throw EngineError(EngineError::Reason::OutOfRange,
                                      "grid conjugate: sup attained on the sampled boundary; widen the grid");
            }
        }
        return value;
    };
    ConvexFunction::Gradient grad = [samples](const Vec& eta) -> Vec {
        return samples->node(grid_sup(*samples, eta).second);
    };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = false, .smooth = false, .legendre_type = false};
    return ConvexFunction(f.label() + "*[grid]", Domain::all(f.dim()), std::move(eval), std::move(grad), {}, tr);
}

}  // namespace

ConjugatePair make_conjugate_pair(const ConvexFunction& f, Engine engine, const PairOptions& opts) {
    switch (engine) {
        case Engine::Closed:
            return ConjugatePair{f, conjugate_closed(f), engine};
        case Engine::Newton:
            if (!f.has_gradient())
                throw EngineError(EngineError::Reason::MissingDerivative,
                                  "newton engine requires a gradient on '" + f.label() + "'");
            return ConjugatePair{f, make_newton_dual(f, opts.newton), engine};
        case Engine::GridBrute:
        case Engine::GridFast:
            if (!opts.grid) throw std::invalid_argument("grid engines require a primal sampling grid");
            return ConjugatePair{f, make_grid_dual(f, *opts.grid), engine};
    }
    throw std::logic_error("make_conjugate_pair: unreachable");
}

}  // namespace fenchel
