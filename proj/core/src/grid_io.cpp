#include "fenchel/grid_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fenchel {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string format_value(const ExtendedReal& v) {
    if (v.is_pos_inf()) return "inf";
    if (v.is_neg_inf()) return "-inf";
    return format_double(v.finite_value());
}

ExtendedReal parse_value(const std::string& tok) {
    if (tok == "inf" || tok == "+inf") return ExtendedReal::pos_inf();
    if (tok == "-inf") return ExtendedReal::neg_inf();
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("grid csv: cannot parse value '" + tok + "'");
    }
    if (pos != tok.size()) throw std::invalid_argument("grid csv: cannot parse value '" + tok + "'");
    return ExtendedReal(v);
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return in;
}

}  // namespace

void write_grid_csv(const GridFunction& g, std::ostream& out) {
    if (g.dim() == 1) {
        out << "axis0,value\n";
        for (std::size_t i = 0; i < g.size(); ++i)
            out << format_double(g.axis(0)[i]) << ',' << format_value(g.value(i)) << '\n';
    } else {
        out << "axis0,axis1,value\n";
        std::size_t flat = 0;
        for (double x0 : g.axis(0))
            for (double x1 : g.axis(1))
                out << format_double(x0) << ',' << format_double(x1) << ',' << format_value(g.value(flat++)) << '\n';
    }
}

void write_grid_csv(const GridFunction& g, const std::string& path) {
    auto out = open_out(path);
    write_grid_csv(g, out);
}

GridFunction read_grid_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("grid csv: empty input");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    int dim;
    if (header == "axis0,value")
        dim = 1;
    else if (header == "axis0,axis1,value")
        dim = 2;
    else
        throw std::invalid_argument("grid csv: unrecognized header '" + header + "'");

    std::map<std::vector<double>, ExtendedReal> cells;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto toks = split_csv_row(line);
        if (static_cast<int>(toks.size()) != dim + 1)
            throw std::invalid_argument("grid csv: wrong column count in row '" + line + "'");
        std::vector<double> key(dim);
        for (int k = 0; k < dim; ++k) {
            const ExtendedReal c = parse_value(toks[k]);
            key[k] = c.finite_value();
        }
        if (!cells.emplace(std::move(key), parse_value(toks[dim])).second)
            throw std::invalid_argument("grid csv: duplicate node in row '" + line + "'");
    }
    if (cells.empty()) throw std::invalid_argument("grid csv: no data rows");

    std::vector<std::vector<double>> axes(dim);
    for (const auto& [key, v] : cells)
        for (int k = 0; k < dim; ++k) axes[k].push_back(key[k]);
    for (auto& ax : axes) {
        std::sort(ax.begin(), ax.end());
        ax.erase(std::unique(ax.begin(), ax.end()), ax.end());
    }
    std::size_t expected = 1;
    for (const auto& ax : axes) expected *= ax.size();
    if (cells.size() != expected) throw std::invalid_argument("grid csv: grid is not complete/rectangular");

    std::vector<ExtendedReal> values;
    values.reserve(expected);
    if (dim == 1) {
        for (double x : axes[0]) values.push_back(cells.at({x}));
    } else {
        for (double x0 : axes[0])
            for (double x1 : axes[1]) values.push_back(cells.at({x0, x1}));
    }
    return GridFunction(std::move(axes), std::move(values));
}

GridFunction read_grid_csv(const std::string& path) {
    auto in = open_in(path);
    return read_grid_csv(in);
}

namespace {

nlohmann::json value_to_json(const ExtendedReal& v) {
    if (v.is_pos_inf()) return "inf";
    if (v.is_neg_inf()) return "-inf";
    return v.finite_value();
}

ExtendedReal value_from_json(const nlohmann::json& j) {
    if (j.is_number()) return ExtendedReal(j.get<double>());
    if (j.is_string()) return parse_value(j.get<std::string>());
    throw std::invalid_argument("grid json: values must be numbers or 'inf'/'-inf'");
}

}  // namespace

std::string grid_to_json(const GridFunction& g) {
    nlohmann::json j;
    j["axis0"] = g.axis(0);
    if (g.dim() == 2) j["axis1"] = g.axis(1);
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : g.values()) vals.push_back(value_to_json(v));
    j["value"] = std::move(vals);
    return j.dump();
}

GridFunction grid_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::vector<double>> axes;
    axes.push_back(j.at("axis0").get<std::vector<double>>());
    if (j.contains("axis1")) axes.push_back(j.at("axis1").get<std::vector<double>>());
    std::vector<ExtendedReal> values;
    for (const auto& v : j.at("value")) values.push_back(value_from_json(v));
    return GridFunction(std::move(axes), std::move(values));
}

void write_grid_json(const GridFunction& g, const std::string& path) {
    auto out = open_out(path);
    out << grid_to_json(g) << '\n';
}

GridFunction read_grid_json(const std::string& path) {
    auto in = open_in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return grid_from_json(buf.str());
}

}  // namespace fenchel
