#include "fenchel/conjugate_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fenchel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Finite nodes of a 1D grid, in ascending theta order.
struct Finite1D {
    std::vector<double> theta;
    std::vector<double> value;
    std::vector<std::size_t> orig;
};

Finite1D compact_finite(const GridFunction& g) {
    Finite1D c;
    const auto& ax = g.axis(0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g.value(i).finite()) continue;
        c.theta.push_back(ax[i]);
        c.value.push_back(g.value(i).finite_value());
        c.orig.push_back(i);
    }
    return c;
}

/// Leftmost maximum of theta[i]*eta - value[i] over i in [lo, hi].
///
/// Both grid engines funnel through this scan, which is what makes the fast
/// transform bit-identical to the brute oracle: pass 1 computes the max
/// (exact under any evaluation order), pass 2 takes the first index whose
/// recomputed score equals it, which is the same index a strict-improvement
/// sweep would keep.
std::pair<double, std::size_t> scan_range(const Finite1D& c, double eta, std::size_t lo, std::size_t hi) {
    double best = -kInf;
    for (std::size_t i = lo; i <= hi; ++i) best = std::max(best, c.theta[i] * eta - c.value[i]);
    for (std::size_t i = lo; i <= hi; ++i)
        if (c.theta[i] * eta - c.value[i] == best) return {best, i};
    return {best, lo};  // unreachable: best is attained by construction
}

void dual_conquer(const Finite1D& c, const std::vector<double>& etas, std::size_t jlo, std::size_t jhi,
                  std::size_t ilo, std::size_t ihi, std::vector<double>& out, std::vector<std::size_t>& arg) {
    if (jlo > jhi || jhi == static_cast<std::size_t>(-1)) return;
    const std::size_t jm = jlo + (jhi - jlo) / 2;
    const auto [v, i] = scan_range(c, etas[jm], ilo, ihi);
    out[jm] = v;
    arg[jm] = i;
    if (jm > jlo) dual_conquer(c, etas, jlo, jm - 1, ilo, i, out, arg);
    if (jm < jhi) dual_conquer(c, etas, jm + 1, jhi, i, ihi, out, arg);
}

std::vector<std::vector<double>> axes_from_spec(const GridSpec& spec) {
    spec.validate();
    std::vector<std::vector<double>> axes;
    for (int k = 0; k < spec.dim(); ++k) axes.push_back(spec.coords(k));
    return axes;
}

void check_dual_axes(const GridFunction& g, const std::vector<std::vector<double>>& dual_axes) {
    if (static_cast<int>(dual_axes.size()) != g.dim())
        throw std::invalid_argument("grid conjugate: dual axes dimension mismatch");
    for (const auto& ax : dual_axes) {
        if (ax.size() < 2) throw std::invalid_argument("grid conjugate: dual axes need at least 2 nodes");
        for (std::size_t i = 0; i + 1 < ax.size(); ++i)
            if (!(ax[i] < ax[i + 1]))
                throw std::invalid_argument("grid conjugate: dual axes must be strictly increasing");
    }
}

DualGrid make_dual(std::vector<std::vector<double>> axes, std::vector<double> values,
                   std::vector<std::size_t> argmax) {
    std::vector<ExtendedReal> vals;
    vals.reserve(values.size());
    for (double v : values) vals.emplace_back(v);
    return DualGrid{GridFunction(std::move(axes), std::move(vals)), std::move(argmax)};
}

}  // namespace

std::pair<double, std::size_t> grid_sup(const GridFunction& g, const Vec& eta) {
    if (eta.size() != g.dim()) throw std::invalid_argument("grid_sup: dimension mismatch");
    if (g.dim() == 1) {
        const Finite1D c = compact_finite(g);
        const auto [v, i] = scan_range(c, eta[0], 0, c.theta.size() - 1);
        return {v, c.orig[i]};
    }
    const auto& ax0 = g.axis(0);
    const auto& ax1 = g.axis(1);
    const std::size_t n1 = ax1.size();
    double best = -kInf;
    std::size_t best_i = 0;
    std::size_t flat = 0;
    for (std::size_t i0 = 0; i0 < ax0.size(); ++i0) {
        for (std::size_t i1 = 0; i1 < n1; ++i1, ++flat) {
            if (!g.value(flat).finite()) continue;
            const double v = ax0[i0] * eta[0] + ax1[i1] * eta[1] - g.value(flat).finite_value();
            if (v > best) {
                best = v;
                best_i = flat;
            }
        }
    }
    return {best, best_i};
}

DualGrid conjugate_grid_brute(const GridFunction& g, const std::vector<std::vector<double>>& dual_axes) {
    check_dual_axes(g, dual_axes);
    if (g.dim() == 1) {
        const Finite1D c = compact_finite(g);
        const auto& etas = dual_axes[0];
        std::vector<double> out(etas.size());
        std::vector<std::size_t> arg(etas.size());
        for (std::size_t j = 0; j < etas.size(); ++j) {
            const auto [v, i] = scan_range(c, etas[j], 0, c.theta.size() - 1);
            out[j] = v;
            arg[j] = c.orig[i];
        }
        return make_dual(dual_axes, std::move(out), std::move(arg));
    }
    const std::size_t k0 = dual_axes[0].size(), k1 = dual_axes[1].size();
    std::vector<double> out(k0 * k1);
    std::vector<std::size_t> arg(k0 * k1);
    std::size_t at = 0;
    for (std::size_t j0 = 0; j0 < k0; ++j0) {
        for (std::size_t j1 = 0; j1 < k1; ++j1, ++at) {
            const auto [v, i] = grid_sup(g, vec2(dual_axes[0][j0], dual_axes[1][j1]));
            out[at] = v;
            arg[at] = i;
        }
    }
    return make_dual(dual_axes, std::move(out), std::move(arg));
}

DualGrid conjugate_grid_brute(const GridFunction& g, const GridSpec& dual_axes) {
    return conjugate_grid_brute(g, axes_from_spec(dual_axes));
}

DualGrid conjugate_grid_fast(const GridFunction& g, const std::vector<std::vector<double>>& dual_axes) {
    check_dual_axes(g, dual_axes);
    if (g.dim() != 1) throw std::invalid_argument("conjugate_grid_fast: 1D only (use the brute engine in 2D)");
    const Finite1D c = compact_finite(g);
    const auto& etas = dual_axes[0];
    std::vector<double> out(etas.size());
    std::vector<std::size_t> arg(etas.size());
    dual_conquer(c, etas, 0, etas.size() - 1, 0, c.theta.size() - 1, out, arg);
    for (auto& i : arg) i = c.orig[i];
    return make_dual(dual_axes, std::move(out), std::move(arg));
}

DualGrid conjugate_grid_fast(const GridFunction& g, const GridSpec& dual_axes) {
    return conjugate_grid_fast(g, axes_from_spec(dual_axes));
}

std::vector<std::vector<double>> auto_dual_axes(const GridFunction& g) {
    std::vector<std::vector<double>> dual;
    for (int k = 0; k < g.dim(); ++k) {
        double lo = kInf, hi = -kInf;
        const std::size_t n0 = g.extent(0);
        const std::size_t n1 = g.dim() == 2 ? g.extent(1) : 1;
        const std::size_t along = g.dim() == 2 ? (k == 0 ? n0 : n1) : n0;
        const std::size_t across = g.dim() == 2 ? (k == 0 ? n1 : n0) : 1;
        for (std::size_t a = 0; a < across; ++a) {
            for (std::size_t i = 0; i + 1 < along; ++i) {
                std::size_t f0, f1;
                if (g.dim() == 1) {
                    f0 = i;
                    f1 = i + 1;
                } else if (k == 0) {
                    f0 = g.flat_index(i, a);
                    f1 = g.flat_index(i + 1, a);
                } else {
                    f0 = g.flat_index(a, i);
                    f1 = g.flat_index(a, i + 1);
                }
                if (!g.value(f0).finite() || !g.value(f1).finite()) continue;
                const double s = (g.value(f1).finite_value() - g.value(f0).finite_value()) /
                                 (g.axis(k)[i + 1] - g.axis(k)[i]);
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
        }
        if (!(lo <= hi)) {  // no adjacent finite pair on this axis
            lo = -1.0;
            hi = 1.0;
        } else if (lo == hi) {
            lo -= 0.5;
            hi += 0.5;
        }
        const std::size_t n = g.extent(k);
        std::vector<double> coords(n);
        const double step = (hi - lo) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) coords[i] = lo + static_cast<double>(i) * step;
        coords.back() = hi;
        dual.push_back(std::move(coords));
    }
    return dual;
}

GridFunction biconjugate_grid(const GridFunction& g) {
    if (g.count_finite() == 1) return g;
    const auto dual = auto_dual_axes(g);
    const DualGrid once = g.dim() == 1 ? conjugate_grid_fast(g, dual) : conjugate_grid_brute(g, dual);
    std::vector<std::vector<double>> primal_axes;
    for (int k = 0; k < g.dim(); ++k) primal_axes.push_back(g.axis(k));
    const DualGrid twice = g.dim() == 1 ? conjugate_grid_fast(once.values, primal_axes)
                                        : conjugate_grid_brute(once.values, primal_axes);
    return twice.values;
}

ReverseOrderReport check_reverse_order(const GridFunction& f1, const GridFunction& f2,
                                       const std::vector<std::vector<double>>& dual_axes, double tol) {
    if (f1.dim() != f2.dim()) throw std::invalid_argument("check_reverse_order: dimension mismatch");
    for (int k = 0; k < f1.dim(); ++k)
        if (f1.axis(k) != f2.axis(k))
            throw std::invalid_argument("check_reverse_order: the grids must share their primal axes");

    ReverseOrderReport report;
    report.tolerance = tol;
    report.premise_holds = true;
    for (std::size_t i = 0; i < f1.size(); ++i) {
        if (f2.value(i) > f1.value(i)) {
            report.premise_holds = false;
            return report;  // implication is vacuous; nothing to verify
        }
    }
    const DualGrid c1 = conjugate_grid_brute(f1, dual_axes);
    const DualGrid c2 = conjugate_grid_brute(f2, dual_axes);
    for (std::size_t j = 0; j < c1.values.size(); ++j) {
        const double gap = c1.values.value(j).finite_value() - c2.values.value(j).finite_value();
        if (gap > report.worst_gap || !report.witness) {
            report.worst_gap = std::max(gap, 0.0);
            report.witness = c1.values.node(j);
        }
        if (gap > tol) ++report.violations;
    }
    return report;
}

ReverseOrderReport check_reverse_order(const GridFunction& f1, const GridFunction& f2, const GridSpec& dual_axes,
                                       double tol) {
    return check_reverse_order(f1, f2, axes_from_spec(dual_axes), tol);
}

}  // namespace fenchel
