#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcflow/oracle.hpp"
#include "arcflow/rowgen.hpp"

using namespace arcflow;
using namespace arcflow::rowgen;

TEST_CASE("worked run with the seeded pool finishes in two iterations") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  FracPoint p{{0.9, 0.5, 0.7, 0.1}, {0.7}};
  RowGenOptions opts;
  opts.initial_points = {{{1, 1, 1, 1}, {2}}};
  auto res = run(inst, p, opts);
  CHECK(res.iterations == 2);
  REQUIRE(res.outcome.verdict == Verdict::Violated);
  CHECK(res.outcome.violation == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(res.outcome.cut->alpha == std::vector<double>{1, 0, 0, 1});
  CHECK(res.outcome.cut->beta == std::vector<double>{1});
  CHECK(res.outcome.cut->gamma == doctest::Approx(0.0));
  REQUIRE(res.trace.size() == 2);
  CHECK(res.trace[0].lp_value == doctest::Approx(0.9));
  CHECK(res.trace[1].lp_value == doctest::Approx(0.3));
  CHECK(res.trace[1].knapsack_value <= 1e-9);
}

TEST_CASE("empty pool converges to the same cut, more slowly") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  FracPoint p{{0.9, 0.5, 0.7, 0.1}, {0.7}};
  auto res = run(inst, p);
  REQUIRE(res.outcome.verdict == Verdict::Violated);
  CHECK(res.outcome.violation == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(res.iterations >= 2);
  // candidate violations never increase as the pool grows
  for (std::size_t i = 1; i < res.trace.size(); ++i)
    CHECK(res.trace[i].lp_value <= res.trace[i - 1].lp_value + 1e-9);
  CHECK(oracle::cut_slack(inst, *res.outcome.cut) <= 1e-9);
}

TEST_CASE("member point terminates with a Member verdict") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  // convex combination of (1,0,1,0|1) and (0,1,0,1|2)
  FracPoint p{{0.5, 0.5, 0.5, 0.5}, {1.5}};
  auto res = run(inst, p);
  CHECK(res.outcome.verdict == Verdict::Member);
  CHECK_FALSE(res.outcome.cut.has_value());
}

TEST_CASE("disabling strengthening never helps and never changes the optimum") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  FracPoint p{{0.9, 0.5, 0.7, 0.1}, {0.7}};
  for (bool seeded : {false, true}) {
    RowGenOptions with, without;
    if (seeded) with.initial_points = without.initial_points = {{{1, 1, 1, 1}, {2}}};
    without.use_strengthen = false;
    auto rs = run(inst, p, with);
    auto rn = run(inst, p, without);
    CHECK(rs.outcome.violation == doctest::Approx(rn.outcome.violation).epsilon(1e-9));
    CHECK(rs.iterations <= rn.iterations);
  }
}

TEST_CASE("multifacility runs agree with complete enumeration") {
  ArcSetInstance inst({40, 70, 90}, {50, 130}, 0);
  std::vector<FracPoint> points = {
      {{0.8, 0.6, 0.4}, {1.0, 0.6}},
      {{0.8, 0.6, 0.4}, {0.9, 0.55}},
      {{0.3, 0.9, 0.2}, {0.6, 0.5}},
      {{0.5, 0.5, 0.5}, {0.4, 0.7}},
  };
  int violated = 0;
  for (const auto& p : points) {
    REQUIRE_FALSE(screen_trivial(inst, p));
    auto res = run(inst, p);
    auto full = oracle::full_separation(inst, p);
    if (full.value > kViolationTol) {
      ++violated;
      REQUIRE(res.outcome.verdict == Verdict::Violated);
      CHECK(res.outcome.violation == doctest::Approx(full.value).epsilon(1e-7));
      CHECK(oracle::cut_slack(inst, *res.outcome.cut) <= 1e-9);
    } else {
      CHECK(res.outcome.verdict == Verdict::Member);
    }
  }
  CHECK(violated >= 1);
}
