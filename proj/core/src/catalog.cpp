#include "fenchel/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fenchel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void bad_params(const std::string& msg) { throw std::invalid_argument("catalog: " + msg); }

}  // namespace

double CatalogParams::scalar(const std::string& key) const {
    auto it = scalars_.find(key);
    if (it == scalars_.end()) bad_params("missing scalar parameter '" + key + "'");
    return it->second;
}

double CatalogParams::scalar_or(const std::string& key, double fallback) const {
    auto it = scalars_.find(key);
    return it == scalars_.end() ? fallback : it->second;
}

Vec CatalogParams::vector(const std::string& key) const {
    auto it = vectors_.find(key);
    if (it != vectors_.end()) return it->second;
    // a 1-vector may arrive as a scalar
    auto s = scalars_.find(key);
    if (s != scalars_.end()) return vec1(s->second);
    bad_params("missing vector parameter '" + key + "'");
}

Vec CatalogParams::vector_or(const std::string& key, const Vec& fallback) const {
    if (vectors_.count(key) || scalars_.count(key)) return vector(key);
    return fallback;
}

Mat CatalogParams::matrix(const std::string& key) const {
    auto it = matrices_.find(key);
    if (it != matrices_.end()) return it->second;
    auto s = scalars_.find(key);
    if (s != scalars_.end()) {
        Mat m(1, 1);
        m(0, 0) = s->second;
        return m;
    }
    bad_params("missing matrix parameter '" + key + "'");
}

void CatalogParams::expect_only(const std::vector<std::string>& allowed) const {
    auto check = [&](const std::string& key) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            bad_params("unknown parameter '" + key + "'");
    };
    for (const auto& [k, v] : scalars_) check(k);
    for (const auto& [k, v] : vectors_) check(k);
    for (const auto& [k, v] : matrices_) check(k);
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

ConvexFunction make_quadratic(Mat q, Vec r, double s) {
    const int m = static_cast<int>(q.rows());
    if (q.cols() != m || r.size() != m) bad_params("quadratic-form: dimension mismatch between Q and r");
    if (!is_spd(q)) bad_params("quadratic-form: Q must be symmetric positive definite");
    auto eval = [q, r, s](const Vec& t) { return 0.5 * t.dot(q * t) + r.dot(t) + s; };
    auto grad = [q, r](const Vec& t) -> Vec { return q * t + r; };
    auto hess = [q](const Vec&) -> Mat { return q; };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = true, .smooth = true, .legendre_type = true};
    std::ostringstream label;
    label << "quadratic-form(" << m << "d)";
    return ConvexFunction(label.str(), Domain::all(m), eval, grad, hess, tr, {}, Vec(Vec::Zero(m)),
                          QuadraticForm{std::move(q), std::move(r), s});
}

ConvexFunction make_affine(Vec a, double b) {
    const int m = static_cast<int>(a.size());
    auto eval = [a, b](const Vec& t) { return a.dot(t) + b; };
    auto grad = [a](const Vec&) -> Vec { return a; };
    auto hess = [m](const Vec&) -> Mat { return Mat::Zero(m, m); };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = false, .smooth = true, .legendre_type = false};
    return ConvexFunction("affine", Domain::all(m), eval, grad, hess, tr, {}, Vec(Vec::Zero(m)),
                          AffineForm{std::move(a), b});
}

ConvexFunction make_point_indicator(Vec at, double value) {
    const int m = static_cast<int>(at.size());
    // The effective domain is the single override point; the query domain is
    // all of R^m and the formula is +inf everywhere off the point.
    auto eval = [](const Vec&) { return kInf; };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = false, .smooth = false, .legendre_type = false};
    std::vector<BoundaryOverride> overrides{{at, value}};
    return ConvexFunction("indicator-point", Domain::all(m), eval, {}, {}, tr, std::move(overrides), {},
                          PointIndicatorForm{std::move(at), value});
}

ConvexFunction make_power_norm(double p, int dim) {
    if (!(p >= 1.0) || !std::isfinite(p)) bad_params("power-norm: p must lie in [1, inf)");
    if (dim < 1) bad_params("power-norm: dimension must be positive");
    auto eval = [p](const Vec& t) { return std::pow(t.norm(), p) / p; };
    std::optional<ConvexFunction::Gradient> grad;
    std::optional<ConvexFunction::Hessian> hess;
    if (p > 1.0) {
        grad = [p](const Vec& t) -> Vec {
            const double n = t.norm();
            if (n == 0.0) return Vec::Zero(t.size());
            return std::pow(n, p - 2.0) * t;
        };
        hess = [p, dim](const Vec& t) -> Mat {
            const double n = t.norm();
            if (n == 0.0) {
                if (p > 2.0) return Mat::Zero(dim, dim);
                if (p == 2.0) return Mat::Identity(dim, dim);
                throw std::domain_error("power-norm: Hessian unbounded at the origin for p < 2");
            }
            return std::pow(n, p - 2.0) * Mat::Identity(dim, dim) +
                   (p - 2.0) * std::pow(n, p - 4.0) * (t * t.transpose());
        };
    }
    const bool strict = p > 1.0;
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = strict, .smooth = strict, .legendre_type = strict};
    std::ostringstream label;
    label << "power-norm(p=" << p << "," << dim << "d)";
    Vec hint = Vec::Constant(dim, 0.5);
    return ConvexFunction(label.str(), Domain::all(dim), eval, std::move(grad), std::move(hess), tr, {},
                          std::move(hint), PowerNormForm{p, dim});
}

ConvexFunction make_exp() {
    auto eval = [](const Vec& t) { return std::exp(t[0]); };
    auto grad = [](const Vec& t) -> Vec { return vec1(std::exp(t[0])); };
    auto hess = [](const Vec& t) -> Mat { return Mat::Constant(1, 1, std::exp(t[0])); };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = true, .smooth = true, .legendre_type = true};
    return ConvexFunction("exp", Domain::all(1), eval, grad, hess, tr, {}, vec1(0.0), ExpForm{});
}

ConvexFunction make_entropy() {
    auto eval = [](const Vec& t) { return t[0] * std::log(t[0]) - t[0]; };
    auto grad = [](const Vec& t) -> Vec { return vec1(std::log(t[0])); };
    auto hess = [](const Vec& t) -> Mat { return Mat::Constant(1, 1, 1.0 / t[0]); };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = true, .smooth = true, .legendre_type = true};
    std::vector<BoundaryOverride> overrides{{vec1(0.0), 0.0}};
    return ConvexFunction("entropy", Domain::positive_half_line(), eval, grad, hess, tr, std::move(overrides),
                          vec1(1.0), EntropyForm{});
}

ConvexFunction make_exp_abs(bool restricted) {
    if (restricted) {
        auto eval = [](const Vec& t) { return std::exp(t[0]) - t[0] - 1.0; };
        auto grad = [](const Vec& t) -> Vec { return vec1(std::exp(t[0]) - 1.0); };
        auto hess = [](const Vec& t) -> Mat { return Mat::Constant(1, 1, std::exp(t[0])); };
        ConvexFunction::Traits tr{.convex = true, .strictly_convex = true, .smooth = true, .legendre_type = true};
        return ConvexFunction("exp-abs|R+", Domain::positive_half_line(), eval, grad, hess, tr, {}, vec1(1.0),
                              ExpAbsForm{true});
    }
    auto eval = [](const Vec& t) {
        const double a = std::abs(t[0]);
        return std::exp(a) - a - 1.0;
    };
    auto grad = [](const Vec& t) -> Vec {
        const double a = std::abs(t[0]);
        const double s = t[0] > 0 ? 1.0 : (t[0] < 0 ? -1.0 : 0.0);
        return vec1(s * (std::exp(a) - 1.0));
    };
    auto hess = [](const Vec& t) -> Mat { return Mat::Constant(1, 1, std::exp(std::abs(t[0]))); };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = true, .smooth = true, .legendre_type = true};
    return ConvexFunction("exp-abs", Domain::all(1), eval, grad, hess, tr, {}, vec1(0.5), ExpAbsForm{false});
}

ConvexFunction make_exp_abs_conj(bool restricted) {
    if (restricted) {
        auto eval = [](const Vec& t) { return (1.0 + t[0]) * std::log1p(t[0]) - t[0]; };
        auto grad = [](const Vec& t) -> Vec { return vec1(std::log1p(t[0])); };
        auto hess = [](const Vec& t) -> Mat { return Mat::Constant(1, 1, 1.0 / (1.0 + t[0])); };
        ConvexFunction::Traits tr{.convex = true, .strictly_convex = true, .smooth = true, .legendre_type = true};
        return ConvexFunction("exp-abs-conj|R+", Domain::positive_half_line(), eval, grad, hess, tr, {}, vec1(1.0),
                              ExpAbsConjForm{true});
    }
    auto eval = [](const Vec& t) {
        const double a = std::abs(t[0]);
        return (1.0 + a) * std::log1p(a) - a;
    };
    auto grad = [](const Vec& t) -> Vec {
        const double a = std::abs(t[0]);
        const double s = t[0] > 0 ? 1.0 : (t[0] < 0 ? -1.0 : 0.0);
        return vec1(s * std::log1p(a));
    };
    auto hess = [](const Vec& t) -> Mat { return Mat::Constant(1, 1, 1.0 / (1.0 + std::abs(t[0]))); };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = true, .smooth = true, .legendre_type = true};
    return ConvexFunction("exp-abs-conj", Domain::all(1), eval, grad, hess, tr, {}, vec1(0.5), ExpAbsConjForm{false});
}

ConvexFunction make_neg_log() {
    auto eval = [](const Vec& t) { return -std::log(t[0]); };
    auto grad = [](const Vec& t) -> Vec { return vec1(-1.0 / t[0]); };
    auto hess = [](const Vec& t) -> Mat { return Mat::Constant(1, 1, 1.0 / (t[0] * t[0])); };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = true, .smooth = true, .legendre_type = true};
    return ConvexFunction("neg-log", Domain::positive_half_line(), eval, grad, hess, tr, {}, vec1(1.0), NegLogForm{});
}

ConvexFunction make_neg_log_conj() {
    auto eval = [](const Vec& t) { return -1.0 - std::log(-t[0]); };
    auto grad = [](const Vec& t) -> Vec { return vec1(-1.0 / t[0]); };
    auto hess = [](const Vec& t) -> Mat { return Mat::Constant(1, 1, 1.0 / (t[0] * t[0])); };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = true, .smooth = true, .legendre_type = true};
    return ConvexFunction("neg-log-conj", Domain::negative_half_line(), eval, grad, hess, tr, {}, vec1(-1.0),
                          NegLogConjForm{});
}

ConvexFunction make_interval_indicator(double lo, double hi) {
    if (!(lo < hi)) bad_params("interval indicator: lo < hi required");
    auto eval = [](const Vec&) { return 0.0; };
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = false, .smooth = false, .legendre_type = false};
    std::vector<BoundaryOverride> overrides{{vec1(lo), 0.0}, {vec1(hi), 0.0}};
    return ConvexFunction("interval-indicator", Domain::open_interval(lo, hi), eval, {}, {}, tr, std::move(overrides),
                          vec1(0.5 * (lo + hi)), IntervalIndicatorForm{lo, hi});
}

ConvexFunction make_rockafellar_2d() {
    auto eval = [](const Vec& t) { return 0.25 * (t[0] * t[0] / t[1] + t[0] * t[0] + t[1] * t[1]); };
    auto grad = [](const Vec& t) -> Vec {
        return vec2(0.5 * t[0] * (1.0 / t[1] + 1.0), 0.25 * (-t[0] * t[0] / (t[1] * t[1]) + 2.0 * t[1]));
    };
    auto hess = [](const Vec& t) -> Mat {
        Mat h(2, 2);
        h(0, 0) = 0.5 * (1.0 / t[1] + 1.0);
        h(0, 1) = h(1, 0) = -0.5 * t[0] / (t[1] * t[1]);
        h(1, 1) = 0.5 * (t[0] * t[0] / (t[1] * t[1] * t[1]) + 1.0);
        return h;
    };
    // strictly convex on the upper half plane, but not Legendre-type: its
    // gradient stays bounded on rays into the origin.
    ConvexFunction::Traits tr{.convex = true, .strictly_convex = true, .smooth = true, .legendre_type = false};
    Vec lo = vec2(-kInf, 0.0);
    Vec hi = vec2(kInf, kInf);
    return ConvexFunction("rockafellar-2d", Domain::halfspace_product(lo, hi), eval, grad, hess, tr, {}, vec2(0.0, 1.0),
                          RockafellarForm{});
}

// ---------------------------------------------------------------------------
// Lookup and spec parsing
// ---------------------------------------------------------------------------

std::vector<std::string> catalog_names() {
    return {"affine", "exp", "power-norm", "exp-abs", "quadratic-form", "indicator-point", "rockafellar-2d",
            "neg-log"};
}

ConvexFunction catalog_lookup(const std::string& name, const CatalogParams& params) {
    if (name == "affine") {
        params.expect_only({"a", "b"});
        return make_affine(params.vector("a"), params.scalar_or("b", 0.0));
    }
    if (name == "exp") {
        params.expect_only({});
        return make_exp();
    }
    if (name == "power-norm") {
        params.expect_only({"p", "m"});
        return make_power_norm(params.scalar("p"), static_cast<int>(params.scalar_or("m", 1.0)));
    }
    if (name == "exp-abs") {
        params.expect_only({"restrict"});
        return make_exp_abs(params.scalar_or("restrict", 0.0) != 0.0);
    }
    if (name == "quadratic-form") {
        params.expect_only({"Q", "r", "s"});
        Mat q = params.matrix("Q");
        Vec r = params.vector_or("r", Vec::Zero(q.rows()));
        return make_quadratic(std::move(q), std::move(r), params.scalar_or("s", 0.0));
    }
    if (name == "indicator-point") {
        params.expect_only({"a", "v"});
        return make_point_indicator(params.vector("a"), params.scalar_or("v", 0.0));
    }
    if (name == "rockafellar-2d") {
        params.expect_only({});
        return make_rockafellar_2d();
    }
    if (name == "neg-log") {
        params.expect_only({});
        return make_neg_log();
    }
    std::string known;
    for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
    bad_params("unknown function '" + name + "' (known: " + known + ")");
}

namespace {

// splits "k1=v1,k2=[...],..." at top-level commas
std::vector<std::string> split_top_level(const std::string& body) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : body) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    if (depth != 0) bad_params("unbalanced brackets in parameter list '" + body + "'");
    return parts;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

CatalogParams parse_catalog_params(const std::string& body) {
    CatalogParams params;
    for (const auto& part : split_top_level(body)) {
        auto eq = part.find('=');
        if (eq == std::string::npos) bad_params("expected key=value, got '" + part + "'");
        const std::string key = trim(part.substr(0, eq));
        const std::string val = trim(part.substr(eq + 1));
        if (key.empty() || val.empty()) bad_params("expected key=value, got '" + part + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(val);
        } catch (const nlohmann::json::parse_error&) {
            bad_params("cannot parse value '" + val + "' for parameter '" + key + "'");
        }
        if (j.is_number()) {
            params.set(key, j.get<double>());
        } else if (j.is_array() && !j.empty() && j[0].is_array()) {
            const int rows = static_cast<int>(j.size());
            const int cols = static_cast<int>(j[0].size());
            Mat m(rows, cols);
            for (int i = 0; i < rows; ++i) {
                if (static_cast<int>(j[i].size()) != cols || !j[i].is_array())
                    bad_params("ragged matrix for parameter '" + key + "'");
                for (int k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
            }
            params.set(key, std::move(m));
        } else if (j.is_array()) {
            Vec v(j.size());
            for (int i = 0; i < static_cast<int>(j.size()); ++i) v[i] = j[i].get<double>();
            params.set(key, std::move(v));
        } else {
            bad_params("parameter '" + key + "' must be a number, vector or matrix");
        }
    }
    return params;
}

ConvexFunction parse_function_spec(const std::string& spec) {
    const std::string s = trim(spec);
    auto brace = s.find('{');
    if (brace == std::string::npos) return catalog_lookup(s, {});
    if (s.back() != '}') bad_params("function spec '" + s + "' must end with '}'");
    const std::string name = trim(s.substr(0, brace));
    const std::string body = s.substr(brace + 1, s.size() - brace - 2);
    return catalog_lookup(name, parse_catalog_params(body));
}

}  // namespace fenchel
