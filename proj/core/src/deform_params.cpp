#include "fenchel/deform_params.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fenchel {

void DeformParams::validate() const {
    const int m = dim();
    if (m < 1) throw std::invalid_argument("DeformParams: empty matrix");
    if (a.cols() != m) throw std::invalid_argument("DeformParams: A must be square");
    if (b.size() != m || c.size() != m) throw std::invalid_argument("DeformParams: b/c dimension mismatch");
    if (!std::isfinite(lambda) || !(lambda > 0.0))
        throw std::invalid_argument("DeformParams: lambda must be finite and > 0");
    if (!a.allFinite() || !b.allFinite() || !c.allFinite() || !std::isfinite(d))
        throw std::invalid_argument("DeformParams: entries must be finite");
    const double det = a.partialPivLu().determinant();
    const double threshold = 1e-12 * std::pow(inf_norm(a), m);
    if (!(std::abs(det) > threshold))
        throw std::invalid_argument("DeformParams: A is (numerically) singular, |det| <= 1e-12 * ||A||_inf^m");
}

bool DeformParams::is_identity() const {
    return lambda == 1.0 && d == 0.0 && a.isIdentity(0.0) && b.isZero(0.0) && c.isZero(0.0);
}

DeformParams DeformParams::identity(int dim) {
    return DeformParams{1.0, Mat::Identity(dim, dim), Vec::Zero(dim), Vec::Zero(dim), 0.0};
}

DeformParams diamond(const DeformParams& p) {
    p.validate();
    // Inverse via LU with partial pivoting. Note the transposes: writing
    // sup_theta { <theta,eta> - F_P(theta) } over u = A theta + b gives
    // conj(F_P)(eta) = lambda conj(F)((1/lambda) A^-T (eta - c)) - <A^-1 b, eta - c> - d.
    const Mat a_inv = p.a.partialPivLu().inverse();
    const Mat a_inv_t = a_inv.transpose();
    DeformParams out;
    out.lambda = p.lambda;
    out.a = a_inv_t / p.lambda;
    out.b = -(a_inv_t * p.c) / p.lambda;
    out.c = -(a_inv * p.b);
    out.d = p.b.dot(a_inv_t * p.c) - p.d;
    out.validate();
    return out;
}

DeformParams deform_params_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("deform params: invalid JSON: ") + e.what());
    }
    DeformParams p;
    try {
        p.lambda = j.at("lambda").get<double>();
        const auto rows = j.at("A").get<std::vector<std::vector<double>>>();
        const int m = static_cast<int>(rows.size());
        p.a = Mat(m, m);
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(rows[i].size()) != m)
                throw std::invalid_argument("deform params: A must be square, row-major");
            for (int k = 0; k < m; ++k) p.a(i, k) = rows[i][k];
        }
        const auto bv = j.at("b").get<std::vector<double>>();
        const auto cv = j.at("c").get<std::vector<double>>();
        p.b = Eigen::Map<const Vec>(bv.data(), static_cast<int>(bv.size()));
        p.c = Eigen::Map<const Vec>(cv.data(), static_cast<int>(cv.size()));
        p.d = j.at("d").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("deform params: ") + e.what());
    }
    p.validate();
    return p;
}

std::string deform_params_to_json(const DeformParams& p) {
    nlohmann::json j;
    j["lambda"] = p.lambda;
    std::vector<std::vector<double>> rows(p.dim(), std::vector<double>(p.dim()));
    for (int i = 0; i < p.dim(); ++i)
        for (int k = 0; k < p.dim(); ++k) rows[i][k] = p.a(i, k);
    j["A"] = rows;
    j["b"] = std::vector<double>(p.b.data(), p.b.data() + p.b.size());
    j["c"] = std::vector<double>(p.c.data(), p.c.data() + p.c.size());
    j["d"] = p.d;
    return j.dump();
}

}  // namespace fenchel
