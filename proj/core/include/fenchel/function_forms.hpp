#pragma once

#include <variant>

#include "fenchel/types.hpp"

namespace fenchel {

// Closed-form family tags carried by catalog functions. The conjugation
// rules and the structure-aware deformation dispatch on these, which is what
// lets the quadratic/affine/indicator pipelines stay exact end to end.

/// 0.5 theta^T Q theta + r^T theta + s with Q symmetric positive definite.
struct QuadraticForm {
    Mat q;
    Vec r;
    double s = 0.0;
};

/// <a, theta> + b.
struct AffineForm {
    Vec a;
    double b = 0.0;
};

/// value at the single point `at`, +inf elsewhere.
struct PointIndicatorForm {
    Vec at;
    double value = 0.0;
};

/// (1/p) ||theta||^p on R^m.
struct PowerNormForm {
    double p = 2.0;
    int dim = 1;
};

/// exp(theta), 1D.
struct ExpForm {};

/// eta log eta - eta on (0, inf), closure value 0 at 0.
struct EntropyForm {};

/// exp(|theta|) - |theta| - 1; restricted=true means the positive-half-line
/// restriction exp(theta) - theta - 1 on (0, inf).
struct ExpAbsForm {
    bool restricted = false;
};

/// (1+|eta|) log(1+|eta|) - |eta|; restricted=true is the (0, inf) branch.
struct ExpAbsConjForm {
    bool restricted = false;
};

/// -log theta on (0, inf).
struct NegLogForm {};

/// -1 - log(-eta) on (-inf, 0).
struct NegLogConjForm {};

/// 0 on the open interval (lo, hi) with closure value 0 at both ends
/// (the 1D unit-ball indicator, conjugate of |theta|).
struct IntervalIndicatorForm {
    double lo = -1.0;
    double hi = 1.0;
};

/// The Rockafellar bivariate function 0.25 (t1^2/t2 + t1^2 + t2^2) on R x R>0.
struct RockafellarForm {};

using FunctionForm = std::variant<QuadraticForm, AffineForm, PointIndicatorForm, PowerNormForm, ExpForm,
                                  EntropyForm, ExpAbsForm, ExpAbsConjForm, NegLogForm, NegLogConjForm,
                                  IntervalIndicatorForm, RockafellarForm>;

}  // namespace fenchel
