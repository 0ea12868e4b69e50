#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcflow/oracle.hpp"
#include "arcflow/refine.hpp"

using namespace arcflow;
using namespace arcflow::refine;

TEST_CASE("scale keeps an already integral inequality") {
  CutInequality cut;
  cut.alpha = {1, 0, 1, 0};
  cut.beta = {1};
  cut.gamma = 0.0;
  auto s = scale(cut);
  REQUIRE(s);
  CHECK(s->alpha == cut.alpha);
  CHECK(s->beta == cut.beta);
  CHECK(s->gamma == 0.0);
  CHECK(s->integralized);
}

TEST_CASE("scale clears small denominators") {
  CutInequality cut;
  cut.alpha = {1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3};
  cut.beta = {1};
  cut.gamma = 0.0;
  auto s = scale(cut);
  REQUIRE(s);
  CHECK(s->alpha == std::vector<double>{1, 1, 1, 1});
  CHECK(s->beta == std::vector<double>{3});

  cut.alpha = {0.5, 0.25};
  cut.beta = {1.5};
  cut.gamma = -0.75;
  s = scale(cut);
  REQUIRE(s);
  CHECK(s->alpha == std::vector<double>{2, 1});
  CHECK(s->beta == std::vector<double>{6});
  CHECK(s->gamma == doctest::Approx(-3.0));
}

TEST_CASE("scale rejects unreachable rationals and huge magnitudes") {
  CutInequality cut;
  cut.alpha = {0.123456789};
  cut.beta = {1};
  CHECK_FALSE(scale(cut));

  cut.alpha = {1e-4};  // denominator 10000 > 1000
  CHECK_FALSE(scale(cut));

  cut.alpha = {2e6};  // integral but out of magnitude range
  CHECK_FALSE(scale(cut));

  // lcm overflow of the cap: 1/999 and 1/998 -> lcm ~ 10^6
  cut.alpha = {1.0 / 999, 1.0 / 998};
  CHECK_FALSE(scale(cut));
}

TEST_CASE("recompute_gamma takes the exact maximum") {
  CutInequality cut;
  cut.alpha = {1, 1};
  cut.beta = {2};
  recompute_gamma(cut, ArcSetInstance({3, 3}, {5}, 0));
  CHECK(cut.gamma == doctest::Approx(0.0));

  cut.alpha = {1, 1, 1, 1};
  cut.beta = {3};
  recompute_gamma(cut, ArcSetInstance({11, 15, 24, 50}, {60}, 0));
  CHECK(cut.gamma == doctest::Approx(0.0));

  // slack inequality gets tightened: x_3 <= y + 5 -> gamma becomes 0
  cut.alpha = {0, 0, 1, 0};
  cut.beta = {1};
  cut.gamma = 5.0;
  recompute_gamma(cut, ArcSetInstance({11, 15, 24, 50}, {60}, 0));
  CHECK(cut.gamma == doctest::Approx(0.0));
}

TEST_CASE("lift order parsing round-trips") {
  for (auto* name : {"lift1", "lift2", "lift3", "lift4"})
    CHECK(to_string(parse_lift_order(name)) == std::string(name));
  CHECK_THROWS_AS(parse_lift_order("lift5"), std::invalid_argument);
}

TEST_CASE("lifting a commodity fixed at zero") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  CutInequality cut;  // x_3 <= y, valid for the reduced set without commodity 4
  cut.alpha = {0, 0, 1, 0};
  cut.beta = {1};
  cut.gamma = 0.0;
  cut.integralized = true;
  FixedVariables fixed;
  fixed.x_at_zero = {3};
  auto res = lift(cut, inst, fixed, LiftOrder::Lift2);
  CHECK(res.cut.alpha == std::vector<double>{0, 0, 1, 1});
  CHECK(res.cut.gamma == doctest::Approx(0.0));
  REQUIRE(res.steps.size() == 1);
  CHECK(res.steps[0].kind == LiftStep::Kind::XZero);
  CHECK(res.steps[0].coefficient == doctest::Approx(1.0));
  CHECK(oracle::cut_slack(inst, res.cut) <= 1e-9);
}

TEST_CASE("lifting a commodity fixed at one shifts the offset") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  CutInequality cut;  // 0 <= y - 1, valid when commodity 4 is preloaded
  cut.alpha = {0, 0, 0, 0};
  cut.beta = {1};
  cut.gamma = -1.0;
  cut.integralized = true;
  FixedVariables fixed;
  fixed.x_at_one = {3};
  auto res = lift(cut, inst, fixed, LiftOrder::Lift2);
  CHECK(res.cut.alpha == std::vector<double>{0, 0, 0, 1});
  CHECK(res.cut.gamma == doctest::Approx(0.0));
  CHECK(oracle::cut_slack(inst, res.cut) <= 1e-9);
}

TEST_CASE("lifting a facility fixed at zero") {
  ArcSetInstance inst({11, 15, 24}, {30, 100}, 0);
  CutInequality cut;  // x_3 <= y_1 on the reduced single-facility set
  cut.alpha = {0, 0, 1};
  cut.beta = {1, 0};
  cut.gamma = 0.0;
  cut.integralized = true;
  FixedVariables fixed;
  fixed.y_at_zero = {1};
  auto res = lift(cut, inst, fixed, LiftOrder::Lift2);
  // the big facility swallows all remaining demand in one unit
  CHECK(res.cut.beta == std::vector<double>{1, 1});
  CHECK(res.scale_factor == 1);
  CHECK(oracle::cut_slack(inst, res.cut) <= 1e-9);
}

TEST_CASE("all four orders produce valid inequalities") {
  ArcSetInstance inst({11, 15, 24, 50}, {60, 130}, 0);
  CutInequality cut;  // x_3 <= y_1 valid once x1 = 0, x4 = 1, y2 = 0 are fixed?
  cut.alpha = {0, 0, 1, 0};
  cut.beta = {1, 0};
  cut.gamma = 0.0;
  cut.integralized = true;
  FixedVariables fixed;
  fixed.x_at_zero = {0};
  fixed.x_at_one = {3};
  fixed.y_at_zero = {1};
  // base validity on the reduced set {x2, x3 free; capacity-60 only; c = -50}
  ArcSetInstance reduced({15, 24}, {60}, -50);
  CutInequality rcut;
  rcut.alpha = {0, 1};
  rcut.beta = {1};
  recompute_gamma(rcut, reduced);
  cut.gamma = rcut.gamma;

  std::vector<double> rcosts{0.3, -0.1, 0.7, 1.2, -0.4, 0.05};
  for (LiftOrder order : {LiftOrder::Lift1, LiftOrder::Lift2, LiftOrder::Lift3, LiftOrder::Lift4}) {
    auto res = lift(cut, inst, fixed, order, &rcosts);
    CHECK(res.steps.size() == 3);
    CHECK(oracle::cut_slack(inst, res.cut) <= 1e-9);
  }
}
