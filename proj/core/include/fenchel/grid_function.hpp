#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fenchel/convex_function.hpp"
#include "fenchel/extended_real.hpp"
#include "fenchel/types.hpp"

namespace fenchel {

/// Rectangular sampling grid, one `lo:hi:n` segment per axis (m in {1,2}).
struct GridSpec {
    struct Axis {
        double lo;
        double hi;
        int n;
    };
    std::vector<Axis> axes;

    /// Parses "lo:hi:n" or "lo:hi:n,lo:hi:n".
    static GridSpec parse(const std::string& text);

    void validate() const;
    int dim() const { return static_cast<int>(axes.size()); }

    /// n equispaced coordinates with exact endpoints.
    std::vector<double> coords(int axis) const;
};

/// Function samples on a rectangular grid; the substrate of the discrete
/// Legendre transform. Values are row-major with axis 0 slowest. Values may
/// be +inf (outside the effective domain) but never -inf (properness), and
/// at least one node must be finite.
class GridFunction {
public:
    GridFunction(std::vector<std::vector<double>> axes, std::vector<ExtendedReal> values);

    int dim() const { return static_cast<int>(axes_.size()); }
    const std::vector<double>& axis(int k) const { return axes_[k]; }
    std::size_t size() const { return values_.size(); }
    std::size_t extent(int k) const { return axes_[k].size(); }

    const ExtendedReal& value(std::size_t flat) const { return values_[flat]; }
    const std::vector<ExtendedReal>& values() const { return values_; }

    std::size_t flat_index(std::size_t i0, std::size_t i1 = 0) const {
        return dim() == 1 ? i0 : i0 * axes_[1].size() + i1;
    }

    /// Grid coordinates of a flat index.
    Vec node(std::size_t flat) const;

    std::size_t count_finite() const;

private:
    std::vector<std::vector<double>> axes_;
    std::vector<ExtendedReal> values_;
};

/// Evaluates f at every node of the grid; +inf is recorded where the point
/// falls outside the effective domain.
GridFunction sample(const ConvexFunction& f, const GridSpec& spec);

}  // namespace fenchel
