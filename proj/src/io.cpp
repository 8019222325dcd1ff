#include "sifca/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "sifca/errors.hpp"

namespace sifca {
namespace {

using nlohmann::ordered_json;

// Rounds to nine significant digits so JSON numbers match the CSV text.
double sig9(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(format_sig(v));
}

ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return sig9(v);
}

ordered_json sample_object(NodeClass c, const CASample& s) {
  ordered_json j;
  j["class"] = to_string(c);
  j["r"] = num(s.r);
  j["angle_deg"] = num(s.angle);
  j["nc_cost"] = num(s.nc_cost);
  j["route_cost"] = num(s.route_cost);
  j["feasible"] = s.feasible;
  j["ca"] = s.ca ? num(*s.ca) : ordered_json(nullptr);
  return j;
}

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Model coordinates to SVG coordinates (y flipped).
std::string svg_xy(Point p) {
  return svg_num(p.x * kSvgUnitsPerRadius) + "," + svg_num(-p.y * kSvgUnitsPerRadius);
}

std::string svg_open(double minx, double miny, double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         svg_num(minx) + " " + svg_num(miny) + " " + svg_num(w) + " " + svg_num(h) + "\">\n";
}

std::string circle(Point c, double radius, const std::string& style) {
  return "  <circle cx=\"" + svg_num(c.x * kSvgUnitsPerRadius) + "\" cy=\"" +
         svg_num(-c.y * kSvgUnitsPerRadius) + "\" r=\"" + svg_num(radius) + "\" " + style + "/>\n";
}

std::string polygon(const std::vector<Point>& pts, const std::string& style) {
  std::string s = "  <polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += svg_xy(pts[i]);
  }
  return s + "\" " + style + "/>\n";
}

Point moved_terminal(NodeClass c, double r, double angle) {
  if (c == NodeClass::I) return polar_to_point(r, deg(angle));
  return polar_to_point(r, deg(angle), {}, deg(180.0));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& field, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + field + "'");
  }
}

}  // namespace

std::string format_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string format_fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const CAField& field) {
  out << kSweepCsvHeader << '\n';
  const char* cls = to_string(field.spec.node_class);
  for (const auto& s : field.samples) {
    out << cls << ',' << format_fixed(s.r) << ',' << format_fixed(s.angle) << ','
        << format_sig(s.nc_cost) << ',' << format_sig(s.route_cost) << ','
        << (s.feasible ? "true" : "false") << ',';
    if (s.ca) out << format_sig(*s.ca);
    out << '\n';
  }
}

std::vector<CsvRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kSweepCsvHeader) {
    throw ParseError("missing sweep CSV header");
  }
  std::vector<CsvRow> rows;
  int n = 1;
  while (std::getline(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 7) throw ParseError("line " + std::to_string(n) + ": expected 7 fields");
    CsvRow row;
    if (f[0] == "I") {
      row.node_class = NodeClass::I;
    } else if (f[0] == "II") {
      row.node_class = NodeClass::II;
    } else {
      throw ParseError("line " + std::to_string(n) + ": bad class '" + f[0] + "'");
    }
    row.sample.r = parse_double(f[1], n);
    row.sample.angle = parse_double(f[2], n);
    row.sample.nc_cost = parse_double(f[3], n);
    row.sample.route_cost = parse_double(f[4], n);
    if (f[5] != "true" && f[5] != "false") {
      throw ParseError("line " + std::to_string(n) + ": bad feasible flag '" + f[5] + "'");
    }
    row.sample.feasible = f[5] == "true";
    if (!f[6].empty()) row.sample.ca = parse_double(f[6], n);
    if (row.sample.feasible != row.sample.ca.has_value()) {
      throw ParseError("line " + std::to_string(n) + ": ca must be present iff feasible");
    }
    rows.push_back(row);
  }
  return rows;
}

std::string sample_json(NodeClass c, const CASample& s, const FeasibilityVerdict& verdict) {
  ordered_json j = sample_object(c, s);
  ordered_json v = ordered_json::array();
  for (const auto& x : verdict.violations) {
    v.push_back({{"constraint", x.constraint}, {"measured", num(x.measured)},
                 {"threshold", num(x.threshold)}});
  }
  j["violations"] = v;
  return j.dump(2) + "\n";
}

std::string field_json(const CAField& field) {
  ordered_json j;
  j["class"] = to_string(field.spec.node_class);
  j["r_range"] = {num(field.spec.r.min), num(field.spec.r.max), num(field.spec.r.step)};
  j["angle_range"] = {num(field.spec.angle.min), num(field.spec.angle.max),
                      num(field.spec.angle.step)};
  j["rows"] = field.rows;
  j["cols"] = field.cols;
  ordered_json samples = ordered_json::array();
  for (const auto& s : field.samples) samples.push_back(sample_object(field.spec.node_class, s));
  j["samples"] = std::move(samples);
  return j.dump(2) + "\n";
}

std::string region_json(const RegionSummary& region) {
  ordered_json j;
  j["class"] = to_string(region.node_class);
  j["threshold"] = num(region.threshold);
  j["empty"] = region.empty;
  if (region.max) {
    j["max_ca"] = num(region.max->ca);
    j["argmax"] = {{"r", num(region.max->r)}, {"angle_deg", num(region.max->angle)}};
  } else {
    j["max_ca"] = nullptr;
    j["argmax"] = nullptr;
  }
  j["mean_boundary_radius"] = region.empty ? ordered_json(nullptr) : num(region.mean_boundary_radius);
  j["max_boundary_deviation"] =
      region.empty ? ordered_json(nullptr) : num(region.max_boundary_deviation);
  if (region.node_class == NodeClass::II) {
    j["min_ca_distance"] = region.min_ca_distance ? num(*region.min_ca_distance) : ordered_json(nullptr);
  }
  ordered_json b = ordered_json::array();
  for (const auto& p : region.boundary) b.push_back({num(p.angle), num(p.r)});
  j["boundary"] = std::move(b);
  return j.dump(2) + "\n";
}

std::string tree_json(const SteinerTree& tree) {
  ordered_json j;
  const auto pts = [](const std::vector<Point>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& p : v) a.push_back({num(p.x), num(p.y)});
    return a;
  };
  j["terminals"] = pts(tree.terminals);
  j["steiner_points"] = pts(tree.steiner_points);
  ordered_json e = ordered_json::array();
  for (const auto& x : tree.edges) e.push_back({{"u", x.u}, {"v", x.v}, {"length", num(x.length)}});
  j["edges"] = std::move(e);
  j["total_cost"] = num(tree.total_cost);
  return j.dump(2) + "\n";
}

std::string region_svg(const CAField& field, const RegionSummary& region) {
  const NodeClass cls = field.spec.node_class;
  const double half = 1.6 * kSvgUnitsPerRadius;
  std::string s = svg_open(-half, -half, 2 * half, 2 * half);
  s += circle({}, kSvgUnitsPerRadius, "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");

  if (!region.empty) {
    // Outer edge from the extracted boundary, inner edge from the smallest r
    // inside the region at each angle.
    std::map<double, double> inner;
    for (const auto& smp : field.samples) {
      if (!smp.ca || *smp.ca < region.threshold) continue;
      auto it = inner.find(smp.angle);
      if (it == inner.end() || smp.r < it->second) inner[smp.angle] = smp.r;
    }
    std::vector<Point> outline;
    for (const auto& b : region.boundary) outline.push_back(moved_terminal(cls, b.r, b.angle));
    for (auto it = region.boundary.rbegin(); it != region.boundary.rend(); ++it) {
      outline.push_back(moved_terminal(cls, inner[it->angle], it->angle));
    }
    if (cls == NodeClass::I) {
      for (int k = 0; k < 5; ++k) {
        for (double sign : {1.0, -1.0}) {
          if (k == 0 && sign > 0) continue;
          std::vector<Point> image;
          for (const auto& p : outline) {
            const double a = sign * std::atan2(p.y, p.x) * 180.0 / std::numbers::pi + 72.0 * k;
            image.push_back(polar_to_point(p.norm(), deg(a)));
          }
          s += polygon(image, "fill=\"#f4b6b6\" stroke=\"none\"");
        }
      }
    }
    s += polygon(outline, "fill=\"#d62728\" fill-opacity=\"0.8\" stroke=\"#7f0000\" stroke-width=\"1\"");
  }

  const auto sinks = regular_sinks();
  for (std::size_t i = 0; i < sinks.size(); ++i) {
    const bool moved = cls == NodeClass::II && i == static_cast<std::size_t>(Sink::D);
    s += circle(sinks[i], 8.0, moved ? "fill=\"white\" stroke=\"black\"" : "fill=\"black\"");
  }
  s += circle({}, cls == NodeClass::I ? 4.0 : 8.0,
              cls == NodeClass::I ? "fill=\"white\" stroke=\"black\"" : "fill=\"black\"");
  return s + "</svg>\n";
}

std::string heatmap_svg(const CAField& field) {
  constexpr double kWidth = 720.0;
  constexpr double kHeight = 720.0;
  constexpr double kMargin = 60.0;
  const double cw = kWidth / field.cols;
  const double ch = kHeight / field.rows;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& smp : field.samples) {
    if (!smp.ca) continue;
    lo = std::min(lo, *smp.ca);
    hi = std::max(hi, *smp.ca);
  }
  std::string s = svg_open(-kMargin, -kMargin, kWidth + 2 * kMargin, kHeight + 2 * kMargin);
  for (int ri = 0; ri < field.rows; ++ri) {
    for (int ai = 0; ai < field.cols; ++ai) {
      const CASample& smp = field.at(ri, ai);
      std::string color = "#bbbbbb";
      if (smp.ca) {
        // Blue below CA = 1, red at or above it.
        const double v = *smp.ca;
        int red = 255;
        int green = 255;
        int blue = 255;
        if (v >= 1.0) {
          const double t = hi > 1.0 ? (v - 1.0) / (hi - 1.0) : 1.0;
          green = blue = static_cast<int>(std::lround(230.0 * (1.0 - t)));
        } else {
          const double t = lo < 1.0 ? (1.0 - v) / (1.0 - lo) : 1.0;
          red = green = static_cast<int>(std::lround(230.0 * (1.0 - t)));
        }
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", red, green, blue);
        color = buf;
      }
      // r grows upward.
      s += "  <rect x=\"" + svg_num(ai * cw) + "\" y=\"" + svg_num(kHeight - (ri + 1) * ch) +
           "\" width=\"" + svg_num(cw) + "\" height=\"" + svg_num(ch) + "\" fill=\"" + color + "\"/>\n";
    }
  }
  const std::string angle_name = field.spec.node_class == NodeClass::I ? "theta" : "alpha";
  s += "  <text x=\"" + svg_num(kWidth / 2) + "\" y=\"" + svg_num(kHeight + 40) +
       "\" text-anchor=\"middle\" font-size=\"20\">" + angle_name + " (deg) " +
       format_sig(field.spec.angle.min) + " to " + format_sig(field.spec.angle.max) + "</text>\n";
  s += "  <text x=\"-20\" y=\"" + svg_num(kHeight / 2) + "\" text-anchor=\"middle\" font-size=\"20\" "
       "transform=\"rotate(-90 -20 " + svg_num(kHeight / 2) + ")\">r " +
       format_sig(field.spec.r.min) + " to " + format_sig(field.spec.r.max) + "</text>\n";
  return s + "</svg>\n";
}

std::string tree_svg(const SteinerTree& tree) {
  double minx = std::numeric_limits<double>::infinity();
  double miny = minx;
  double maxx = -minx;
  double maxy = -minx;
  for (int i = 0; i < tree.node_count(); ++i) {
    const Point p = tree.node(i);
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double pad = 0.15 * std::max({maxx - minx, maxy - miny, 1e-3});
  std::string s = svg_open((minx - pad) * kSvgUnitsPerRadius, -(maxy + pad) * kSvgUnitsPerRadius,
                           (maxx - minx + 2 * pad) * kSvgUnitsPerRadius,
                           (maxy - miny + 2 * pad) * kSvgUnitsPerRadius);
  for (const auto& e : tree.edges) {
    const Point a = tree.node(e.u);
    const Point b = tree.node(e.v);
    s += "  <line x1=\"" + svg_num(a.x * kSvgUnitsPerRadius) + "\" y1=\"" +
         svg_num(-a.y * kSvgUnitsPerRadius) + "\" x2=\"" + svg_num(b.x * kSvgUnitsPerRadius) +
         "\" y2=\"" + svg_num(-b.y * kSvgUnitsPerRadius) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const auto& p : tree.terminals) s += circle(p, 7.0, "fill=\"black\"");
  for (const auto& p : tree.steiner_points) {
    s += circle(p, 6.0, "fill=\"white\" stroke=\"black\" stroke-width=\"2\"");
  }
  return s + "</svg>\n";
}

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string xs;
    std::string ys;
    std::string extra;
    if (!(ss >> xs)) continue;
    if (!(ss >> ys) || (ss >> extra)) {
      throw ParseError("line " + std::to_string(n) + ": expected 'x y'");
    }
    const Point p{parse_double(xs, n), parse_double(ys, n)};
    if (!p.finite()) throw ParseError("line " + std::to_string(n) + ": non-finite coordinate");
    pts.push_back(p);
  }
  return pts;
}

}  // namespace sifca
