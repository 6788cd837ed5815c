#pragma once

#include <optional>
#include <string>

#include "fenchel/conjugate_newton.hpp"
#include "fenchel/convex_function.hpp"
#include "fenchel/grid_function.hpp"

namespace fenchel {

enum class Engine { Closed, Newton, GridBrute, GridFast };

Engine parse_engine(const std::string& name);  // closed | newton | grid-brute | grid-fast
std::string engine_name(Engine e);

struct PairOptions {
    std::optional<GridSpec> grid;  // primal sampling grid for the grid engines
    NewtonOptions newton;
};

/// A primal function together with its conjugate as realized by one engine.
///
/// - Closed: the analytic rule (throws EngineError{NoClosedForm} if absent).
/// - Newton: the dual evaluates by gradient inversion; its gradient is the
///   recorded argmax (grad conj F = (grad F)^-1). Evaluation throws
///   EngineError when the solve fails or eta leaves the gradient range.
/// - GridBrute/GridFast: the primal is sampled once on opts.grid and the
///   dual evaluates the discrete sup at the queried point. A sup attained on
///   the boundary of the sampled range (with more than one finite node)
///   throws EngineError{OutOfRange}: the true sup likely escapes the grid.
struct ConjugatePair {
    ConvexFunction primal;
    ConvexFunction dual;
    Engine engine;
};

ConjugatePair make_conjugate_pair(const ConvexFunction& f, Engine engine, const PairOptions& opts = {});

}  // namespace fenchel
