#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sifca/analysis.hpp"
#include "sifca/coding_cost.hpp"
#include "sifca/routing_cost.hpp"

namespace sifca {

/// Nine significant digits, as used for costs and CA values.
std::string format_sig(double v);
/// Nine digits after the point, as used for grid parameters.
std::string format_fixed(double v);

inline constexpr const char* kSweepCsvHeader = "class,r,angle_deg,nc_cost,route_cost,feasible,ca";

void write_sweep_csv(std::ostream& out, const CAField& field);

struct CsvRow {
  NodeClass node_class = NodeClass::I;
  CASample sample;
};

/// Parses the output of write_sweep_csv. Throws ParseError.
std::vector<CsvRow> read_sweep_csv(std::istream& in);

std::string sample_json(NodeClass c, const CASample& s, const FeasibilityVerdict& verdict);
std::string field_json(const CAField& field);
std::string region_json(const RegionSummary& region);
std::string tree_json(const SteinerTree& tree);

/// Model-space drawings use 400 SVG units per circumradius, y pointing up.
inline constexpr double kSvgUnitsPerRadius = 400.0;

/// Circumcircle, regular terminals, and the threshold region of the field
/// drawn as a filled polygon in model coordinates. Class I regions are also
/// unfolded into the other nine sectors in a lighter fill.
std::string region_svg(const CAField& field, const RegionSummary& region);
/// Heatmap of CA over the (angle, r) grid; infeasible cells are grey.
std::string heatmap_svg(const CAField& field);
/// Terminals as filled circles, Steiner points hollow, edges as segments.
std::string tree_svg(const SteinerTree& tree);

/// One "x y" pair per line; '#' starts a comment; blank lines are skipped.
/// Throws ParseError.
std::vector<Point> parse_points(std::istream& in);

}  // namespace sifca
