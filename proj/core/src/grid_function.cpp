#include "fenchel/grid_function.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace fenchel {

GridSpec GridSpec::parse(const std::string& text) {
    GridSpec spec;
    std::stringstream ss(text);
    std::string seg;
    while (std::getline(ss, seg, ',')) {
        Axis ax{};
        char colon1 = 0, colon2 = 0;
        std::stringstream s2(seg);
        if (!(s2 >> ax.lo >> colon1 >> ax.hi >> colon2 >> ax.n) || colon1 != ':' || colon2 != ':' ||
            (s2 >> std::ws, !s2.eof()))
            throw std::invalid_argument("grid spec: expected lo:hi:n, got '" + seg + "'");
        spec.axes.push_back(ax);
    }
    spec.validate();
    return spec;
}

void GridSpec::validate() const {
    if (axes.empty() || axes.size() > 2)
        throw std::invalid_argument("grid spec: dimension must be 1 or 2");
    for (const auto& ax : axes) {
        if (!std::isfinite(ax.lo) || !std::isfinite(ax.hi))
            throw std::invalid_argument("grid spec: bounds must be finite");
        if (!(ax.lo < ax.hi)) throw std::invalid_argument("grid spec: lo < hi required");
        if (ax.n < 2) throw std::invalid_argument("grid spec: at least 2 samples per axis");
    }
}

std::vector<double> GridSpec::coords(int axis) const {
    const Axis& ax = axes.at(axis);
    std::vector<double> c(ax.n);
    const double step = (ax.hi - ax.lo) / (ax.n - 1);
    for (int i = 0; i < ax.n; ++i) c[i] = ax.lo + i * step;
    c.back() = ax.hi;
    return c;
}

GridFunction::GridFunction(std::vector<std::vector<double>> axes, std::vector<ExtendedReal> values)
    : axes_(std::move(axes)), values_(std::move(values)) {
    if (axes_.empty() || axes_.size() > 2)
        throw std::invalid_argument("GridFunction: dimension must be 1 or 2");
    std::size_t expected = 1;
    for (const auto& ax : axes_) {
        if (ax.size() < 2) throw std::invalid_argument("GridFunction: at least 2 samples per axis");
        for (std::size_t i = 0; i + 1 < ax.size(); ++i)
            if (!(ax[i] < ax[i + 1]))
                throw std::invalid_argument("GridFunction: axis coordinates must be strictly increasing");
        for (double x : ax)
            if (!std::isfinite(x)) throw std::invalid_argument("GridFunction: axis coordinates must be finite");
        expected *= ax.size();
    }
    if (values_.size() != expected)
        throw std::invalid_argument("GridFunction: value count does not match the grid shape");
    bool any_finite = false;
    for (const auto& v : values_) {
        if (v.is_neg_inf())
            throw std::invalid_argument("GridFunction: -inf values are not allowed (properness)");
        any_finite |= v.finite();
    }
    if (!any_finite) throw std::invalid_argument("GridFunction: at least one finite value required");
}

Vec GridFunction::node(std::size_t flat) const {
    if (dim() == 1) return vec1(axes_[0][flat]);
    const std::size_t n1 = axes_[1].size();
    return vec2(axes_[0][flat / n1], axes_[1][flat % n1]);
}

std::size_t GridFunction::count_finite() const {
    std::size_t n = 0;
    for (const auto& v : values_) n += v.finite() ? 1 : 0;
    return n;
}

GridFunction sample(const ConvexFunction& f, const GridSpec& spec) {
    spec.validate();
    if (spec.dim() != f.dim()) throw std::invalid_argument("sample: grid dimension does not match the function");
    std::vector<std::vector<double>> axes;
    for (int k = 0; k < spec.dim(); ++k) axes.push_back(spec.coords(k));
    std::vector<ExtendedReal> values;
    if (spec.dim() == 1) {
        values.reserve(axes[0].size());
        for (double x : axes[0]) values.push_back(f(vec1(x)));
    } else {
        values.reserve(axes[0].size() * axes[1].size());
        for (double x0 : axes[0])
            for (double x1 : axes[1]) values.push_back(f(vec2(x0, x1)));
    }
    return GridFunction(std::move(axes), std::move(values));
}

}  // namespace fenchel
