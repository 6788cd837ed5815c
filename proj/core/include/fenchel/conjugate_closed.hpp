#pragma once

#include "fenchel/convex_function.hpp"

namespace fenchel {

/// Analytic convex conjugate for catalog families with a known rule.
/// Rules are involutive pairs, so applying the transform twice returns the
/// original family. Throws EngineError{NoClosedForm} when there is no rule
/// (rockafellar-2d, deformed/generic functions, power-norm p=1 above 1D);
/// callers fall back to another engine.
ConvexFunction conjugate_closed(const ConvexFunction& f);

bool has_closed_conjugate(const ConvexFunction& f);

}  // namespace fenchel
