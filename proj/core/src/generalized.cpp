#include "fenchel/generalized.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fenchel/deform.hpp"
#include "fenchel/errors.hpp"

namespace fenchel {

ExtendedReal generalized_conjugate(const ConjugatePair& base, const GenParams& p, const Vec& eta) {
    p.validate();
    if (eta.size() != p.dim() || p.dim() != base.primal.dim())
        throw std::invalid_argument("generalized_conjugate: dimension mismatch");
    const ExtendedReal lf = base.dual(p.a * eta + p.b);
    return lf.scaled_by(p.lambda) + ExtendedReal(p.c.dot(eta) + p.d);
}

ExtendedReal generalized_conjugate(const ConvexFunction& f, const GenParams& p, const Vec& eta, Engine engine,
                                   const PairOptions& opts) {
    return generalized_conjugate(make_conjugate_pair(f, engine, opts), p, eta);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Engine failure is distinct from a +inf value.
std::optional<ExtendedReal> try_eval(const std::function<ExtendedReal(const Vec&)>& side, const Vec& eta) {
    try {
        return side(eta);
    } catch (const EngineError&) {
        return std::nullopt;
    }
}

/// Axis-aligned bounding grid of the preimage of `spec` under x -> a x + b,
/// with the same node counts. In 1D this is exact; in 2D it is the bounding
/// box of the mapped corners.
GridSpec preimage_grid(const GridSpec& spec, const Mat& a, const Vec& b) {
    const auto lu = a.partialPivLu();
    GridSpec out;
    if (spec.dim() == 1) {
        const double t0 = lu.solve(vec1(spec.axes[0].lo) - b)[0];
        const double t1 = lu.solve(vec1(spec.axes[0].hi) - b)[0];
        out.axes.push_back({std::min(t0, t1), std::max(t0, t1), spec.axes[0].n});
        return out;
    }
    Vec lo = Vec::Constant(2, kInf), hi = Vec::Constant(2, -kInf);
    for (int c = 0; c < 4; ++c) {
        const Vec corner = vec2(c & 1 ? spec.axes[0].hi : spec.axes[0].lo, c & 2 ? spec.axes[1].hi : spec.axes[1].lo);
        const Vec t = lu.solve(corner - b);
        lo = lo.cwiseMin(t);
        hi = hi.cwiseMax(t);
    }
    out.axes.push_back({lo[0], hi[0], spec.axes[0].n});
    out.axes.push_back({lo[1], hi[1], spec.axes[1].n});
    return out;
}

std::optional<Vec> indicator_point_of(const ConvexFunction& f) {
    if (f.form())
        if (const auto* pi = std::get_if<PointIndicatorForm>(&*f.form())) return pi->at;
    return std::nullopt;
}

}  // namespace

TheoremReport theorem_check(const ConvexFunction& f, const DeformParams& p, Engine engine,
                            const TheoremCheckOptions& opts) {
    p.validate();
    if (p.dim() != f.dim()) throw std::invalid_argument("theorem_check: parameter dimension mismatch");
    if (opts.probe_count < 1 || !(opts.tolerance > 0.0))
        throw std::invalid_argument("theorem_check: need probe_count >= 1 and a positive tolerance");

    PairOptions pair_opts;
    pair_opts.newton = opts.newton;
    pair_opts.grid = opts.grid;
    const bool grid_engine = engine == Engine::GridBrute || engine == Engine::GridFast;
    if (grid_engine && !opts.grid) throw std::invalid_argument("theorem_check: grid engines require opts.grid");

    const ConjugatePair base = make_conjugate_pair(f, engine, pair_opts);

    const DeformParams pd = diamond(p);
    const ConvexFunction deformed = deform(f, pd);
    PairOptions rhs_opts = pair_opts;
    if (grid_engine) rhs_opts.grid = preimage_grid(*opts.grid, pd.a, pd.b);
    const ConjugatePair rhs_pair = make_conjugate_pair(deformed, engine, rhs_opts);

    auto lhs = [&](const Vec& eta) { return generalized_conjugate(base, p, eta); };
    auto rhs = [&](const Vec& eta) { return rhs_pair.dual(eta); };

    // ---- probe selection -------------------------------------------------
    std::vector<Vec> probes;
    const auto lhs_point = indicator_point_of(base.dual);
    const auto rhs_point = indicator_point_of(rhs_pair.dual);
    if (lhs_point || rhs_point) {
        // equispaced scans cannot hit a single finite point; probe the
        // indicator points computed from each side plus off-points for the
        // +-inf pattern
        std::vector<Vec> centers;
        if (lhs_point) centers.push_back(p.a.partialPivLu().solve(*lhs_point - p.b));  // A eta + b = at
        if (rhs_point) centers.push_back(*rhs_point);
        for (const Vec& c : centers) {
            probes.push_back(c);
            for (int ax = 0; ax < f.dim(); ++ax)
                for (double off : {-1.3, 0.7}) {
                    Vec q = c;
                    q[ax] += off;
                    probes.push_back(q);
                }
        }
    } else {
        const double w = opts.scan_halfwidth;
        std::vector<Vec> finite_candidates;
        if (f.dim() == 1) {
            const int n = std::max(opts.scan_points, 3);
            for (int i = 0; i < n; ++i) {
                const Vec eta = vec1(-w + 2.0 * w * i / (n - 1));
                const auto lv = try_eval(lhs, eta), rv = try_eval(rhs, eta);
                if (lv && rv && lv->finite() && rv->finite()) finite_candidates.push_back(eta);
            }
            if (!finite_candidates.empty()) {
                const double lo = finite_candidates.front()[0];
                const double hi = finite_candidates.back()[0];
                if (opts.probe_count == 1 || hi == lo) {
                    probes.push_back(vec1(0.5 * (lo + hi)));
                } else {
                    for (int i = 0; i < opts.probe_count; ++i)
                        probes.push_back(vec1(lo + (hi - lo) * i / (opts.probe_count - 1)));
                }
            }
        } else {
            const int n = 41;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Vec eta = vec2(-w + 2.0 * w * i / (n - 1), -w + 2.0 * w * j / (n - 1));
                    const auto lv = try_eval(lhs, eta), rv = try_eval(rhs, eta);
                    if (lv && rv && lv->finite() && rv->finite()) finite_candidates.push_back(eta);
                }
            if (!finite_candidates.empty()) {
                const std::size_t total = finite_candidates.size();
                const std::size_t want = std::min<std::size_t>(opts.probe_count, total);
                for (std::size_t i = 0; i < want; ++i) probes.push_back(finite_candidates[i * total / want]);
            }
        }
    }

    TheoremReport report;
    report.tolerance = opts.tolerance;
    if (probes.empty()) return report;  // no comparable region found: pass stays false

    // ---- probe evaluation ------------------------------------------------
    for (const Vec& eta : probes) {
        TheoremProbe probe;
        probe.eta = eta;
        const auto lv = try_eval(lhs, eta), rv = try_eval(rhs, eta);
        if (!lv || !rv) {
            probe.status = TheoremProbe::Status::Inconclusive;
            ++report.inconclusive;
            report.probes.push_back(std::move(probe));
            continue;
        }
        probe.lhs = *lv;
        probe.rhs = *rv;
        if (lv->finite() && rv->finite()) {
            probe.abs_diff = std::abs(lv->finite_value() - rv->finite_value());
            probe.status = probe.abs_diff <= opts.tolerance ? TheoremProbe::Status::Match
                                                            : TheoremProbe::Status::Mismatch;
            report.max_abs_diff = std::max(report.max_abs_diff, probe.abs_diff);
        } else if (lv->is_pos_inf() && rv->is_pos_inf()) {
            probe.status = TheoremProbe::Status::Match;
        } else {
            // one side +inf, the other finite: a domain mismatch is a real
            // bug, not a tolerance issue
            probe.abs_diff = kInf;
            probe.status = TheoremProbe::Status::Mismatch;
        }
        probe.status == TheoremProbe::Status::Match ? ++report.matched : ++report.mismatched;
        report.probes.push_back(std::move(probe));
    }
    report.pass = report.mismatched == 0 && report.matched >= 1;
    return report;
}

}  // namespace fenchel
