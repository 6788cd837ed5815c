#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "fenchel/types.hpp"

namespace fenchel {

enum class DomainKind { All, OpenBox, HalfspaceProduct };

/// Open effective domain of a convex function.
///
/// The base set is a product of open per-axis intervals (bounds may be
/// infinite); `All` and `HalfspaceProduct` are labels over the same storage.
/// An optional affine change of variable x -> Mx + t is applied before the
/// box test, so affine preimages of box domains (as produced by function
/// deformation) stay representable. Membership is always a strict interior
/// test; boundary values live in ConvexFunction overrides, never here.
class Domain {
public:
    static Domain all(int dim) {
        check_dim(dim);
        const double inf = std::numeric_limits<double>::infinity();
        return Domain(DomainKind::All, Vec::Constant(dim, -inf), Vec::Constant(dim, inf));
    }

    static Domain open_box(Vec lo, Vec hi) { return make_box(DomainKind::OpenBox, std::move(lo), std::move(hi)); }

    /// Per-axis halfspaces or full lines; same storage as a box, kept as a
    /// distinct kind for reporting.
    static Domain halfspace_product(Vec lo, Vec hi) {
        return make_box(DomainKind::HalfspaceProduct, std::move(lo), std::move(hi));
    }

    /// 1D convenience.
    static Domain open_interval(double lo, double hi) { return open_box(vec1(lo), vec1(hi)); }
    static Domain positive_half_line() {
        return halfspace_product(vec1(0.0), vec1(std::numeric_limits<double>::infinity()));
    }
    static Domain negative_half_line() {
        return halfspace_product(vec1(-std::numeric_limits<double>::infinity()), vec1(0.0));
    }

    /// Domain of theta such that A*theta + b lies in this domain.
    Domain affine_preimage(const Mat& a, const Vec& b) const {
        if (a.rows() != dim() || a.cols() != dim() || b.size() != dim())
            throw std::invalid_argument("Domain::affine_preimage: dimension mismatch");
        Domain d = *this;
        if (kind_ == DomainKind::All) return d;  // preimage of R^m under an invertible map
        if (map_) {
            d.map_ = AffineMap{map_->m * a, map_->m * b + map_->t};
        } else {
            d.map_ = AffineMap{a, b};
        }
        return d;
    }

    int dim() const { return static_cast<int>(lo_.size()); }
    DomainKind kind() const { return kind_; }
    bool is_all() const { return kind_ == DomainKind::All; }
    bool has_affine_map() const { return map_.has_value(); }

    /// Per-axis open bounds of the base box (before the affine map, if any).
    const Vec& lower() const { return lo_; }
    const Vec& upper() const { return hi_; }

    /// Strict interior membership.
    bool contains(const Vec& x) const {
        if (x.size() != dim()) throw std::invalid_argument("Domain::contains: dimension mismatch");
        for (int i = 0; i < x.size(); ++i)
            if (!std::isfinite(x[i])) return false;
        if (kind_ == DomainKind::All) return true;
        Vec y = map_ ? Vec(map_->m * x + map_->t) : x;
        for (int i = 0; i < y.size(); ++i)
            if (!(lo_[i] < y[i] && y[i] < hi_[i])) return false;
        return true;
    }

    /// True when some axis has a finite bound (there is a boundary to probe).
    bool has_finite_boundary() const {
        if (kind_ == DomainKind::All) return false;
        for (int i = 0; i < dim(); ++i)
            if (std::isfinite(lo_[i]) || std::isfinite(hi_[i])) return true;
        return false;
    }

private:
    struct AffineMap {
        Mat m;
        Vec t;
    };

    Domain(DomainKind kind, Vec lo, Vec hi) : kind_(kind), lo_(std::move(lo)), hi_(std::move(hi)) {}

    static Domain make_box(DomainKind kind, Vec lo, Vec hi) {
        if (lo.size() != hi.size()) throw std::invalid_argument("Domain: bound dimension mismatch");
        check_dim(static_cast<int>(lo.size()));
        for (int i = 0; i < lo.size(); ++i) {
            if (std::isnan(lo[i]) || std::isnan(hi[i]) || !(lo[i] < hi[i]))
                throw std::invalid_argument("Domain: per-axis bounds must satisfy lo < hi (non-empty open set)");
        }
        return Domain(kind, std::move(lo), std::move(hi));
    }

    static void check_dim(int dim) {
        if (dim < 1) throw std::invalid_argument("Domain: dimension must be positive");
    }

    DomainKind kind_;
    Vec lo_, hi_;
    std::optional<AffineMap> map_;
};

}  // namespace fenchel
