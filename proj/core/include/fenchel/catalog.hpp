#pragma once

#include <map>
#include <string>
#include <vector>

#include "fenchel/convex_function.hpp"

namespace fenchel {

/// Parameters for catalog entries. Keys are typed buckets; lookups are
/// strict (unknown keys are rejected so typos fail loudly).
class CatalogParams {
public:
    CatalogParams() = default;

    CatalogParams& set(const std::string& key, double v) {
        scalars_[key] = v;
        return *this;
    }
    CatalogParams& set(const std::string& key, Vec v) {
        vectors_[key] = std::move(v);
        return *this;
    }
    CatalogParams& set(const std::string& key, Mat v) {
        matrices_[key] = std::move(v);
        return *this;
    }

    bool has(const std::string& key) const {
        return scalars_.count(key) || vectors_.count(key) || matrices_.count(key);
    }

    double scalar(const std::string& key) const;
    double scalar_or(const std::string& key, double fallback) const;
    Vec vector(const std::string& key) const;
    Vec vector_or(const std::string& key, const Vec& fallback) const;
    Mat matrix(const std::string& key) const;

    /// Throws if any key is not in `allowed`.
    void expect_only(const std::vector<std::string>& allowed) const;

private:
    std::map<std::string, double> scalars_;
    std::map<std::string, Vec> vectors_;
    std::map<std::string, Mat> matrices_;
};

/// Known entries: affine, exp, power-norm, exp-abs, quadratic-form,
/// indicator-point, rockafellar-2d, neg-log.
ConvexFunction catalog_lookup(const std::string& name, const CatalogParams& params = {});

/// Parses a function spec of the form `name` or `name{key=value,...}` where
/// values are numbers, [v0,v1,...] vectors or [[...],[...]] row-major
/// matrices, and returns the catalog entry.
ConvexFunction parse_function_spec(const std::string& spec);

/// The spec-string parser's parameter stage, exposed for the CLI.
CatalogParams parse_catalog_params(const std::string& body);

std::vector<std::string> catalog_names();

/// Builders shared with the closed-form conjugation rules.
ConvexFunction make_quadratic(Mat q, Vec r, double s);
ConvexFunction make_affine(Vec a, double b);
ConvexFunction make_point_indicator(Vec at, double value);
ConvexFunction make_power_norm(double p, int dim);
ConvexFunction make_exp();
ConvexFunction make_entropy();
ConvexFunction make_exp_abs(bool restricted);
ConvexFunction make_exp_abs_conj(bool restricted);
ConvexFunction make_neg_log();
ConvexFunction make_neg_log_conj();
ConvexFunction make_interval_indicator(double lo, double hi);
ConvexFunction make_rockafellar_2d();

}  // namespace fenchel
