#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace fenchel {

/// Value on the extended real line R u {+inf, -inf}.
///
/// Backed by an IEEE double whose infinities are the two markers; NaN is
/// rejected at every entry point so comparisons form a total order.
/// Addition saturates (finite + inf = inf) but the indeterminate
/// combination (+inf) + (-inf) throws instead of producing anything.
class ExtendedReal {
public:
    ExtendedReal() : v_(0.0) {}

    ExtendedReal(double v) : v_(v) {
        if (std::isnan(v)) throw std::invalid_argument("ExtendedReal: NaN is not a member of the extended reals");
    }

    static ExtendedReal pos_inf() { return ExtendedReal(std::numeric_limits<double>::infinity(), tag{}); }
    static ExtendedReal neg_inf() { return ExtendedReal(-std::numeric_limits<double>::infinity(), tag{}); }

    bool finite() const { return std::isfinite(v_); }
    bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }
    bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }

    /// Raw double, infinities included.
    double as_double() const { return v_; }

    /// Finite value; throws if infinite.
    double finite_value() const {
        if (!finite()) throw std::domain_error("ExtendedReal: value is not finite");
        return v_;
    }

    ExtendedReal operator-() const { return ExtendedReal(-v_, tag{}); }

    friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
        if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
            throw std::domain_error("ExtendedReal: indeterminate sum (+inf) + (-inf)");
        return ExtendedReal(a.v_ + b.v_, tag{});
    }

    friend ExtendedReal operator-(ExtendedReal a, ExtendedReal b) { return a + (-b); }

    /// Multiplication by a strictly positive scalar; preserves infinities with sign.
    ExtendedReal scaled_by(double lambda) const {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw std::invalid_argument("ExtendedReal::scaled_by: scale must be finite and > 0");
        return ExtendedReal(lambda * v_, tag{});
    }

    friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }

    friend std::weak_ordering operator<=>(ExtendedReal a, ExtendedReal b) {
        if (a.v_ < b.v_) return std::weak_ordering::less;
        if (a.v_ > b.v_) return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    }

    std::string str() const;

private:
    struct tag {};
    ExtendedReal(double v, tag) : v_(v) {}
    double v_;
};

inline std::string ExtendedReal::str() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v_);
    return buf;
}

}  // namespace fenchel
