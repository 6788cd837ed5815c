#pragma once

#include <iosfwd>
#include <string>

#include "fenchel/grid_function.hpp"

namespace fenchel {

/// CSV with header `axis0[,axis1],value`, one node per row; +inf and -inf
/// serialize as the literals `inf` / `-inf`, finite values as %.17g
/// (round-trip exact).
void write_grid_csv(const GridFunction& g, std::ostream& out);
void write_grid_csv(const GridFunction& g, const std::string& path);

/// Accepts rows in any order; the grid must come out complete and
/// rectangular.
GridFunction read_grid_csv(std::istream& in);
GridFunction read_grid_csv(const std::string& path);

/// JSON mirror with the same field names: {"axis0": [...], ("axis1": [...],)
/// "value": [...]} with values row-major and infinities as the strings
/// "inf" / "-inf" (JSON has no infinity literal).
std::string grid_to_json(const GridFunction& g);
GridFunction grid_from_json(const std::string& text);
void write_grid_json(const GridFunction& g, const std::string& path);
GridFunction read_grid_json(const std::string& path);

std::string format_double(double v);

}  // namespace fenchel
