#pragma once

#include <string>

#include "fenchel/types.hpp"

namespace fenchel {

/// Deformation parameter P = (lambda, A, b, c, d) with lambda > 0 and A
/// invertible. Invertibility is a hard rejection, not a regularization:
/// |det A| must exceed 1e-12 * ||A||_inf^m.
struct DeformParams {
    double lambda = 1.0;
    Mat a;
    Vec b;
    Vec c;
    double d = 0.0;

    int dim() const { return static_cast<int>(a.rows()); }

    /// Throws std::invalid_argument when any invariant fails.
    void validate() const;

    bool is_identity() const;

    static DeformParams identity(int dim);
};

/// Dual-side parameter tuple of the generalized transform
/// (lambda, E, f, g, h). Structurally identical to DeformParams — the same
/// 5-tuple plays both roles, so the distinction is kept at the naming level
/// only (fields map componentwise: E=a, f=b, g=c, h=d).
using GenParams = DeformParams;

/// The parameter involution under which conjugation commutes with
/// deformation: conj(F_P) = (conj F)_{diamond(P)}, diamond(diamond(P)) = P.
DeformParams diamond(const DeformParams& p);

/// JSON object {"lambda": .., "A": [[..]], "b": [..], "c": [..], "d": ..}
/// (A row-major).
DeformParams deform_params_from_json(const std::string& text);
std::string deform_params_to_json(const DeformParams& p);

}  // namespace fenchel
