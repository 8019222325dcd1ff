#include <random>

#include "doctest.h"
#include "sifca/analysis.hpp"
#include "sifca/coding_cost.hpp"
#include "sifca/errors.hpp"
#include "sifca/routing_cost.hpp"
#include "support.hpp"

using namespace sifca;
using namespace testing_support;

namespace {

double s66() { return std::sin(rad(66.0)); }

double anchor(double r, double phase) {
  return std::sqrt(r * r - 4 * s66() * r * std::cos(rad(phase)) + 4 * s66() * s66());
}

double oracle(double r, double theta) {
  return esmt_oracle(terminals_class_i({r, deg(theta)}).points()).total_cost;
}

}  // namespace

TEST_CASE("regular configuration") {
  const auto c = closed_form_class_i({0.0, deg(0.0)});
  const double l1 = 2 * s66() + std::sqrt(1 + 4 * s66() * s66() - 4 * s66() * std::cos(rad(168.0)));
  CHECK(c.costs[0] == doctest::Approx(l1).epsilon(1e-14));
  CHECK(c.costs[0] == doctest::Approx(4.640023).epsilon(1e-6));
  CHECK(c.costs[1] == doctest::Approx(c.costs[0]).epsilon(1e-14));
  CHECK(c.costs[2] == doctest::Approx(c.costs[0]).epsilon(1e-14));
  CHECK(c.minimum == doctest::Approx(4.640023620299).epsilon(1e-12));
  CHECK(c.argmin == 1);
  const double ca = cost_advantage(nc_cost_class_i({0.0, deg(0.0)}), c.minimum);
  CHECK(ca == doctest::Approx(1.01583).epsilon(1e-5));
  CHECK(std::abs(c.minimum - oracle(0.0, 0.0)) <= 1e-6 * c.minimum);
}

TEST_CASE("closed form matches the oracle at (0.2, 18)") {
  const auto c = closed_form_class_i({0.2, deg(18.0)});
  CHECK(std::abs(c.minimum - oracle(0.2, 18.0)) <= 1e-6 * c.minimum);
}

TEST_CASE("closed form preconditions") {
  CHECK_THROWS_AS(closed_form_class_i({0.1, deg(40.0)}), NonCanonicalAngleError);
  CHECK_THROWS_AS(closed_form_class_i({0.1, deg(-1.0)}), NonCanonicalAngleError);
  CHECK_THROWS_AS(closed_form_class_i({-0.1, deg(10.0)}), NegativeRadiusError);
  CHECK_NOTHROW(closed_form_class_i({0.1, deg(36.0)}));
}

TEST_CASE("case-4 forms against direct evaluation") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double r = 0.45 * u(rng);
    const double t = 36.0 * u(rng);
    const auto c = closed_form_class_i({r, deg(t)});
    const double l41 = std::sqrt(1 + r * r - 2 * r * std::cos(rad(36 + t))) + anchor(r, 72 - t) +
                       anchor(r, t + 144);
    const double l42 = anchor(r, 144 + t) +
                       std::sqrt(1 + r * r - 2 * r * std::sin(rad(66 + t)) -
                                 4 * s66() * r * std::sin(rad(102 - t)) + 4 * s66() * s66() -
                                 4 * s66() * std::cos(rad(168.0)));
    CHECK(c.case4_forms[0] == doctest::Approx(l41).epsilon(1e-13));
    CHECK(c.case4_forms[1] == doctest::Approx(l42).epsilon(1e-13));
    CHECK(c.case4_forms[2] == c.case4_forms[1]);
    // Case 5 is case 4 mirrored in theta.
    const double l51 = std::sqrt(1 + r * r - 2 * r * std::cos(rad(36 - t))) + anchor(r, 72 + t) +
                       anchor(r, 144 - t);
    CHECK(c.case5_forms[0] == doctest::Approx(l51).epsilon(1e-13));
    CHECK(c.case5_forms[1] == c.case5_forms[0]);
    for (int k = 0; k < 5; ++k) {
      CHECK(std::isfinite(c.costs[k]));
      CHECK(c.costs[k] > 0.0);
      CHECK(c.minimum <= c.costs[k]);
    }
    CHECK(c.costs[c.argmin - 1] == c.minimum);
  }
}

TEST_CASE("the literal L_I-4-3 has a negative radicand") {
  const auto lit = closed_form_class_i({0.1, deg(10.0)}, {FormulaReading::Literal, 0.0});
  CHECK(std::isnan(lit.case4_forms[2]));
  const auto rep = closed_form_class_i({0.1, deg(10.0)});
  CHECK(std::isfinite(rep.case4_forms[2]));
  // The other forms are unaffected by the reading.
  CHECK(lit.case4_forms[0] == rep.case4_forms[0]);
  CHECK(lit.costs[0] == rep.costs[0]);
}

TEST_CASE("subcase predicates") {
  // Above BE: r cos(36° - theta) >= cos 72°.
  const auto above = closed_form_class_i({0.4, deg(36.0)});
  CHECK(above.case4 == Case4Subcase::AboveBE);
  CHECK(closed_form_class_i({0.1, deg(36.0)}).case4 != Case4Subcase::AboveBE);
  const auto right = closed_form_class_i({0.4, deg(0.0)});
  CHECK(right.case5 == Case5Subcase::RightOfAC);
  CHECK(right.case4 == Case4Subcase::AboveBE);
  // Mirror symmetry at theta = 0.
  const auto c0 = closed_form_class_i({0.2, deg(0.0)});
  CHECK(c0.costs[3] == doctest::Approx(c0.costs[4]).epsilon(1e-14));
  CHECK(std::string(to_string(Case4Subcase::BelowBE)) == "below-BE");
  CHECK(std::string(to_string(Case5Subcase::LeftOfAC)) == "left-of-AC");
  CHECK(std::isfinite(case4_cos_bof({0.2, deg(10.0)})));
}

TEST_CASE("fault-injection offset only moves L_I-1") {
  const auto base = closed_form_class_i({0.1, deg(5.0)});
  const auto hit = closed_form_class_i({0.1, deg(5.0)}, {FormulaReading::Repaired, 0.25});
  CHECK(hit.costs[0] == doctest::Approx(base.costs[0] + 0.25));
  for (int k = 1; k < 5; ++k) CHECK(hit.costs[k] == base.costs[k]);
}

TEST_CASE("closed form never undercuts the oracle on a coarse grid") {
  int agree = 0;
  int cells = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 7; ++j) {
      const double r = 0.45 * i / 7.0;
      const double t = 36.0 * j / 6.0;
      const auto c = closed_form_class_i({r, deg(t)});
      const double o = oracle(r, t);
      for (int k = 0; k < 5; ++k) CHECK(c.costs[k] >= o - 1e-9);
      ++cells;
      if (std::abs(c.minimum - o) <= 1e-6 * o) ++agree;
    }
  }
  CHECK(agree >= cells - 1);
}
