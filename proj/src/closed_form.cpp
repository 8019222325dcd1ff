#include <cmath>
#include <string>

#include "sifca/errors.hpp"
#include "sifca/routing_cost.hpp"

namespace sifca {
namespace {

struct Terms {
  double r;
  double theta;
  double s66;
  // 4 sin²66° - 4 sin66° cos168°, common to the two-part radicals.
  double tail;

  // Distance from the source to the anchor point at angular offset `phase`.
  double anchor(double phase) const {
    return std::sqrt(r * r - 4.0 * s66 * r * cos_deg(phase) + 4.0 * s66 * s66);
  }
  // Distance from the source to a pentagon vertex at angular offset `phase`.
  double vertex(double phase) const {
    return std::sqrt(1.0 + r * r - 2.0 * r * cos_deg(phase));
  }
};

Terms make_terms(const NodeClassIConfig& cfg) {
  const double s66 = sin_deg(66.0);
  return {cfg.r, cfg.theta.value, s66, 4.0 * s66 * s66 - 4.0 * s66 * cos_deg(168.0)};
}

constexpr double kCanonicalSlack = 1e-12;

}  // namespace

const char* to_string(Case4Subcase s) {
  switch (s) {
    case Case4Subcase::Nondegenerate: return "nondegenerate";
    case Case4Subcase::BelowBE: return "below-BE";
    case Case4Subcase::AboveBE: return "above-BE";
  }
  return "?";
}

const char* to_string(Case5Subcase s) {
  switch (s) {
    case Case5Subcase::Nondegenerate: return "nondegenerate";
    case Case5Subcase::RightOfAC: return "right-of-AC";
    case Case5Subcase::LeftOfAC: return "left-of-AC";
  }
  return "?";
}

double case4_cos_bof(const NodeClassIConfig& cfg) {
  const Terms k = make_terms(cfg);
  const double r = k.r;
  const double t = k.theta;
  const double s36 = sin_deg(36.0);
  const double s84 = sin_deg(84.0);
  const double numerator = 1.0 + 2.0 * r * r - 2.0 * r * cos_deg(36.0 + t) +
                           4.0 * k.s66 * k.s66 - 4.0 * r * k.s66 * cos_deg(72.0 - t) -
                           16.0 * s36 * s36 * s84 * s84;
  return numerator / (8.0 * k.vertex(36.0 + t) * k.anchor(72.0 - t));
}

CaseCostsClassI closed_form_class_i(const NodeClassIConfig& cfg, const ClosedFormOptions& options) {
  if (cfg.r < 0.0) throw NegativeRadiusError("closed_form_class_i: negative radius");
  const double t = cfg.theta.value;
  if (!(t >= -kCanonicalSlack && t <= 36.0 + kCanonicalSlack)) {
    throw NonCanonicalAngleError("closed_form_class_i: theta " + std::to_string(t) +
                                 " outside [0, 36] degrees");
  }
  const Terms k = make_terms(cfg);
  const double r = k.r;
  const double s = k.s66;
  const bool literal = options.reading == FormulaReading::Literal;

  CaseCostsClassI out;

  // Case 1: OBCD + OAE.
  out.costs[0] = k.anchor(72.0 - t) +
                 std::sqrt(1.0 + r * r + 2.0 * r * sin_deg(t + 6.0) +
                           4.0 * s * r * sin_deg(t - 6.0) + k.tail) +
                 options.case1_offset;
  // Case 2: OCDE + OAB.
  out.costs[1] = k.anchor(t) + std::sqrt(1.0 + r * r - 2.0 * r * cos_deg(168.0 - t) +
                                         4.0 * s * r * sin_deg(66.0 - t) + k.tail);
  // Case 3: OADE + OBC.
  out.costs[2] = k.anchor(t + 72.0) + std::sqrt(1.0 + r * r - 2.0 * r * sin_deg(t - 6.0) -
                                                4.0 * s * r * sin_deg(t + 6.0) + k.tail);

  // Case 4: OABE + OCD.
  const double degenerate4 = 1.0 + r * r - 2.0 * r * sin_deg(66.0 + t) -
                             4.0 * s * r * sin_deg(102.0 - t);
  out.case4_forms[0] = k.vertex(36.0 + t) + k.anchor(72.0 - t) + k.anchor(t + 144.0);
  out.case4_forms[1] = k.anchor(144.0 + t) + std::sqrt(degenerate4 + k.tail);
  out.case4_forms[2] =
      literal ? k.anchor(t + 144.0) + std::sqrt(degenerate4 + 4.0 * s * cos_deg(168.0))
              : out.case4_forms[1];
  if (r * cos_deg(36.0 - t) >= cos_deg(72.0)) {
    out.case4 = Case4Subcase::AboveBE;
  } else if (case4_cos_bof(cfg) > -0.5) {
    out.case4 = Case4Subcase::Nondegenerate;
  } else {
    out.case4 = Case4Subcase::BelowBE;
  }
  out.costs[3] = out.case4_forms[static_cast<int>(out.case4)];

  // Case 5: OABC + ODE, the mirror image of case 4 under theta -> -theta.
  const NodeClassIConfig mirrored{cfg.r, deg(-t)};
  out.case5_forms[0] = k.vertex(36.0 - t) + k.anchor(t + 72.0) + k.anchor(144.0 - t);
  out.case5_forms[2] = k.anchor(144.0 - t) + std::sqrt(1.0 + r * r - 2.0 * r * sin_deg(66.0 - t) -
                                                       4.0 * s * r * sin_deg(102.0 + t) + k.tail);
  // L_I-5-2 is published with the same right-hand side as L_I-5-1.
  out.case5_forms[1] = out.case5_forms[0];
  if (r * cos_deg(36.0 + t) >= cos_deg(72.0)) {
    out.case5 = Case5Subcase::RightOfAC;
  } else if (case4_cos_bof(mirrored) > -0.5) {
    out.case5 = Case5Subcase::Nondegenerate;
  } else {
    out.case5 = Case5Subcase::LeftOfAC;
  }
  out.costs[4] = out.case5_forms[static_cast<int>(out.case5)];

  out.argmin = 1;
  out.minimum = out.costs[0];
  for (int i = 1; i < 5; ++i) {
    if (out.costs[i] < out.minimum) {
      out.minimum = out.costs[i];
      out.argmin = i + 1;
    }
  }
  return out;
}

}  // namespace sifca
