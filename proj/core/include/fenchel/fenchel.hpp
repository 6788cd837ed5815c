#pragma once

// Umbrella header for the fenchel core library.

#include "fenchel/catalog.hpp"
#include "fenchel/conjugate_closed.hpp"
#include "fenchel/conjugate_grid.hpp"
#include "fenchel/conjugate_newton.hpp"
#include "fenchel/conjugate_pair.hpp"
#include "fenchel/convex_function.hpp"
#include "fenchel/deform.hpp"
#include "fenchel/deform_params.hpp"
#include "fenchel/divergence.hpp"
#include "fenchel/domain.hpp"
#include "fenchel/errors.hpp"
#include "fenchel/extended_real.hpp"
#include "fenchel/finite_diff.hpp"
#include "fenchel/function_forms.hpp"
#include "fenchel/generalized.hpp"
#include "fenchel/grid_function.hpp"
#include "fenchel/grid_io.hpp"
#include "fenchel/legendre_type.hpp"
#include "fenchel/report.hpp"
#include "fenchel/rng.hpp"
#include "fenchel/subdifferential.hpp"
#include "fenchel/types.hpp"
