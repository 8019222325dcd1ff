// Acceptance checks: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance <path to sifca executable>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sifca/analysis.hpp"
#include "sifca/coding_cost.hpp"
#include "sifca/routing_cost.hpp"
#include "sifca/validate.hpp"

using namespace sifca;

namespace {

// Values quoted by the source and their tolerances.
constexpr double kCA = 1.0158;
constexpr double kCATol = 0.0005;
constexpr double kNC = 4.567727;
constexpr double kNCTol = 1e-6;
constexpr double kESMT = 4.640023;
constexpr double kESMTTol = 1e-4;
constexpr double kRadiusLo = 0.20;
constexpr double kRadiusHi = 0.24;
constexpr double kRadius = 0.225;
constexpr double kRadiusTol = 0.005;
constexpr double kMaxDeviation = 0.01;
constexpr double kDistance = 0.450;
constexpr double kDistanceTol = 0.02;
constexpr double kMonoTol = -1e-8;
constexpr double kAgreeRel = 1e-6;
constexpr double kAgreeFraction = 0.99;
constexpr double kOracleSlack = 1e-9;
constexpr double kExact = 1e-9;
constexpr double kSteinerAngleTol = 0.01;
constexpr double kDegenerateEdge = 1e-6;
constexpr int kRandomSets = 1000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

bool within(double v, double target, double tol) { return std::abs(v - target) <= tol; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double t = seconds_since(t0);
  const bool in_time = t <= budget_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title << "  ("
            << o.detail << "; " << num(t) << " s of " << num(budget_s) << " s"
            << (in_time ? "" : ", over budget") << ")" << std::endl;
}

struct Capture {
  int status = -1;
  std::string out;
};

Capture capture(const std::string& cmd) {
  Capture c;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) c.out.append(buf.data(), n);
  const int st = pclose(p);
  c.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return c;
}

std::vector<Point> random_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point p{u(rng), u(rng)};
    bool far = true;
    for (const auto& q : pts) far = far && distance(p, q) > 1e-3;
    if (far) pts.push_back(p);
  }
  return pts;
}

// Largest deviation from 120° among angles at Steiner points whose incident
// edges all have length >= kDegenerateEdge; -1 if there is none.
double steiner_angle_error(const SteinerTree& t) {
  const int n = static_cast<int>(t.terminals.size());
  double worst = -1.0;
  for (int s = n; s < t.node_count(); ++s) {
    std::vector<Point> nbrs;
    bool degenerate = false;
    for (const auto& e : t.edges) {
      if (e.u != s && e.v != s) continue;
      const int o = e.u == s ? e.v : e.u;
      if (distance(t.node(s), t.node(o)) < kDegenerateEdge) degenerate = true;
      nbrs.push_back(t.node(o));
    }
    if (degenerate || nbrs.size() != 3) continue;
    for (int i = 0; i < 3; ++i) {
      const double a = angle_at(t.node(s), nbrs[i], nbrs[(i + 1) % 3]).value;
      worst = std::max(worst, std::abs(a - 120.0));
    }
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <sifca executable>\n";
    return 2;
  }
  const std::string cli = argv[1];
  std::cout << "acceptance: " << cli << std::endl;

  criterion(1, "regular-model CA = 1.0158 +- 0.0005 for both classes", 1.0, [] {
    const double ca1 = cost_advantage(nc_cost_class_i({0.0, deg(0.0)}),
                                      closed_form_class_i({0.0, deg(0.0)}).minimum);
    const double ca2 =
        cost_advantage(nc_cost_class_ii({1.0, deg(0.0)}), esmt_class_ii({1.0, deg(0.0)}));
    return Outcome{within(ca1, kCA, kCATol) && within(ca2, kCA, kCATol),
                   "Class I " + num(ca1) + ", Class II " + num(ca2)};
  });

  criterion(2, "regular NC = 5 sin 66 and ESMT three ways", 5.0, [] {
    const double nc = nc_cost_class_i({0.0, deg(0.0)});
    const double closed = closed_form_class_i({0.0, deg(0.0)}).costs[0];
    const double oracle = esmt_oracle(terminals_class_i({0.0, deg(0.0)}).points()).total_cost;
    const double product = kCA * nc;
    const bool ok = within(nc, kNC, kNCTol) && within(nc, 5.0 * sin_deg(66.0), kNCTol) &&
                    within(closed, kESMT, kESMTTol) && within(oracle, kESMT, kESMTTol) &&
                    within(product, oracle, kCATol * nc);
    return Outcome{ok, "NC " + num(nc) + ", L_I-1 " + num(closed) + ", oracle " + num(oracle) +
                           ", 1.0158 x NC " + num(product)};
  });

  double class_i_mean = std::nan("");
  criterion(3, "Class I region radius in [0.20, 0.24], 0.225 +- 0.005, deviation <= 0.01", 120.0,
            [&] {
              const auto reg = extract_region(sweep(SweepSpec::defaults(NodeClass::I)));
              if (reg.empty) return Outcome{false, "empty region"};
              class_i_mean = reg.mean_boundary_radius;
              const double m = reg.mean_boundary_radius;
              const bool ok = m >= kRadiusLo && m <= kRadiusHi && within(m, kRadius, kRadiusTol) &&
                              reg.max_boundary_deviation <= kMaxDeviation;
              return Outcome{ok, "mean boundary radius " + num(m) + ", max deviation " +
                                     num(reg.max_boundary_deviation)};
            });

  std::optional<double> class_ii_min;
  criterion(4, "Class II max CA at (1, 0) +- one cell, value 1.0158 +- 0.0005", 1800.0, [&] {
    const SweepSpec spec = SweepSpec::defaults(NodeClass::II);
    const CAField f = sweep(spec);
    class_ii_min = extract_region(f).min_ca_distance;
    const MaxCA m = max_ca(f);
    const bool at = std::abs(m.r - 1.0) <= spec.r.step + 1e-12 &&
                    std::abs(m.angle) <= spec.angle.step + 1e-12;
    return Outcome{at && within(m.ca, kCA, kCATol),
                   "max " + num(m.ca) + " at r " + num(m.r) + ", alpha " + num(m.angle)};
  });

  criterion(5, "position independence: Class I diameter and Class II distance 0.450 +- 0.02",
            1.0, [&] {
              const double diameter = 2.0 * class_i_mean;
              const double d2 = class_ii_min.value_or(std::nan(""));
              const bool ok1 = within(diameter, kDistance, kDistanceTol);
              const bool ok2 = within(d2, kDistance, kDistanceTol);
              return Outcome{ok1 && ok2, "Class I diameter " + num(diameter) +
                                             (ok1 ? " ok" : " out") +
                                             ", Class II min distance " + num(d2) +
                                             (ok2 ? " ok" : " out")};
            });

  criterion(6, "monotonicity: y1..y5 >= -1e-8 and df/dtheta >= -1e-8", 60.0, [] {
    MonotonicityOptions opts;
    opts.tolerance = kMonoTol;
    const auto rep = monotonicity_report(opts);
    std::string d;
    for (int k = 0; k < 5; ++k) {
      d += "min y" + std::to_string(k + 1) + " " + num(rep.min_y[k].value) + " at (" +
           num(rep.min_y[k].r) + ", " + num(rep.min_y[k].theta) + "), ";
    }
    d += "min df/dtheta " + num(rep.min_dfdtheta.value) + " at (" + num(rep.min_dfdtheta.r) +
         ", " + num(rep.min_dfdtheta.theta) + ")";
    return Outcome{rep.pass(), d};
  });

  criterion(7, "oracle equivalence on the 50x36 grid", 600.0, [] {
    ValidateOptions vo;
    vo.monotonicity = false;
    const auto rep = run_validate(vo);
    int agree = 0;
    std::size_t exceed = 0;
    double worst_above = -1.0;
    for (const auto& c : rep.grid) {
      if (std::abs(c.closed.minimum - c.oracle) <= kAgreeRel * c.oracle) ++agree;
      if (c.closed.minimum - c.oracle > kAgreeRel * c.oracle) ++exceed;
      worst_above = std::max(worst_above, c.oracle - c.closed.minimum);
    }
    const double frac = static_cast<double>(agree) / static_cast<double>(rep.grid.size());
    const bool ok = rep.grid.size() == 50 * 36 && frac >= kAgreeFraction &&
                    worst_above <= kOracleSlack && exceed == rep.above_oracle.size();
    return Outcome{ok, "agreement " + num(frac) + ", worst oracle - closed " + num(worst_above) +
                           ", cells listed " + std::to_string(rep.above_oracle.size())};
  });

  criterion(8, "oracle sanity on classic and random inputs", 600.0, [] {
    const std::vector<Point> tri{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}};
    const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const double t = esmt_oracle(tri).total_cost;
    const double s = esmt_oracle(sq).total_cost;
    bool ok = within(t, std::sqrt(3.0), kExact) && within(s, 1.0 + std::sqrt(3.0), kExact);

    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> size(4, 6);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    int above_mst = 0, angle_bad = 0, rigid_bad = 0, checked_steiner = 0;
    double worst_angle = 0.0, worst_rigid = 0.0;
    for (int i = 0; i < kRandomSets; ++i) {
      const auto pts = random_points(rng, size(rng));
      const auto tree = esmt_oracle(pts);
      if (tree.total_cost > mst(pts) + kExact) ++above_mst;
      const double err = steiner_angle_error(tree);
      if (err >= 0.0) {
        ++checked_steiner;
        worst_angle = std::max(worst_angle, err);
        if (err > kSteinerAngleTol) ++angle_bad;
      }
      const double phi = angle(rng);
      const Point shift{angle(rng), -angle(rng)};
      std::vector<Point> moved;
      for (const auto& p : pts) {
        moved.push_back({std::cos(phi) * p.x - std::sin(phi) * p.y + shift.x,
                         std::sin(phi) * p.x + std::cos(phi) * p.y + shift.y});
      }
      const double rel = std::abs(esmt_oracle(moved).total_cost - tree.total_cost) / tree.total_cost;
      worst_rigid = std::max(worst_rigid, rel);
      if (rel > kExact) ++rigid_bad;
    }
    ok = ok && above_mst == 0 && angle_bad == 0 && rigid_bad == 0;
    return Outcome{ok, "triangle " + num(t) + ", square " + num(s) + ", above MST " +
                           std::to_string(above_mst) + "/" + std::to_string(kRandomSets) +
                           ", worst 120-degree error " + num(worst_angle) + " over " +
                           std::to_string(checked_steiner) + " trees, worst rigid-motion drift " +
                           num(worst_rigid)};
  });

  criterion(9, "full topology counts 1, 3, 15, 105 for k = 3..6", 5.0, [] {
    const std::array<std::size_t, 4> expected{1, 3, 15, 105};
    std::string d;
    bool ok = true;
    for (int k = 3; k <= 6; ++k) {
      const auto n = enumerate_full_topologies(k).size();
      ok = ok && n == expected[k - 3];
      d += (d.empty() ? "" : ", ") + std::to_string(n);
    }
    return Outcome{ok, d};
  });

  criterion(10, "repeated sweeps byte-identical and validate exits 0", 900.0, [&] {
    const std::string sweep = "'" + cli + "' sweep --class I";
    const auto a = capture(sweep);
    const auto b = capture(sweep + " --threads 1");
    const auto v = capture("'" + cli + "' validate");
    const bool same = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
    return Outcome{same && v.status == 0, std::string("sweep outputs ") +
                                              (same ? "identical" : "differ") + " (" +
                                              std::to_string(a.out.size()) +
                                              " bytes), validate exit " +
                                              std::to_string(v.status)};
  });

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
