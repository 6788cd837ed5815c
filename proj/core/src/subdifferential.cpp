#include "fenchel/subdifferential.hpp"

#include <stdexcept>

namespace fenchel {

Subdifferential1D subdiff_1d(const ConvexFunction& f, double theta, double h) {
    if (f.dim() != 1) throw std::invalid_argument("subdiff_1d: the function must be one-dimensional");
    if (!(h > 0.0)) throw std::invalid_argument("subdiff_1d: step must be positive");

    Subdifferential1D result;
    result.at = theta;
    const ExtendedReal f0 = f(vec1(theta));
    if (!f0.finite()) return result;  // outside dom(F): empty subdifferential

    const ExtendedReal fm = f(vec1(theta - h));
    const ExtendedReal fp = f(vec1(theta + h));
    result.empty = false;
    result.lower = fm.is_pos_inf() ? ExtendedReal::neg_inf()
                                   : ExtendedReal((f0.finite_value() - fm.finite_value()) / h);
    result.upper = fp.is_pos_inf() ? ExtendedReal::pos_inf()
                                   : ExtendedReal((fp.finite_value() - f0.finite_value()) / h);
    return result;
}

}  // namespace fenchel
