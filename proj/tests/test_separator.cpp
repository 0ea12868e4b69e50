#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcflow/oracle.hpp"
#include "arcflow/separator.hpp"

using namespace arcflow;
using namespace arcflow::separator;

TEST_CASE("variable fixing partitions the point") {
  ArcSetInstance inst({11, 15, 24, 50}, {60, 130}, 10);
  FracPoint p{{0.0, 1.0, 0.4, 0.7}, {0.5, 0.0}};
  auto red = build_reduced(inst, p);
  CHECK(red.q_bar == std::vector<std::size_t>{2, 3});
  CHECK(red.t_bar == std::vector<std::size_t>{0});
  CHECK(red.fixed.x_at_zero == std::vector<std::size_t>{0});
  CHECK(red.fixed.x_at_one == std::vector<std::size_t>{1});
  CHECK(red.fixed.y_at_zero == std::vector<std::size_t>{1});
  CHECK(red.cbar == 10 - 15);
  CHECK_FALSE(red.fallback_facility);

  auto ri = red.reduced_instance(inst);
  CHECK(ri.demands() == std::vector<Int>{24, 50});
  CHECK(ri.capacities() == std::vector<Int>{60});
  CHECK(ri.existing() == -5);
  auto rp = red.reduced_point(p);
  CHECK(rp.x == std::vector<double>{0.4, 0.7});
  CHECK(rp.y == std::vector<double>{0.5});

  CutInequality rc;
  rc.alpha = {1, 1};
  rc.beta = {2};
  rc.gamma = -1;
  auto full = red.expand(rc, inst);
  CHECK(full.alpha == std::vector<double>{0, 0, 1, 1});
  CHECK(full.beta == std::vector<double>{2, 0});
  CHECK(full.gamma == -1.0);
}

TEST_CASE("all-zero facility point adjoins the smallest facility") {
  ArcSetInstance inst({20, 30}, {60, 130}, 0);
  auto red = build_reduced(inst, {{0.5, 0.5}, {0.0, 0.0}});
  CHECK(red.fallback_facility);
  CHECK(red.t_bar == std::vector<std::size_t>{0});
  CHECK(red.fixed.y_at_zero == std::vector<std::size_t>{1});
}

TEST_CASE("trivially broken bounds short-circuit the pipeline") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  auto rep = separate(inst, {{1.5, 0.2, 0.2, 0.2}, {1.0}});
  CHECK(rep.stage == "trivial");
  CHECK(rep.outcome.verdict == Verdict::Violated);
}

TEST_CASE("integral points are recognized as members during fixing") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  auto rep = separate(inst, {{1, 0, 1, 0}, {1.0}});
  CHECK(rep.stage == "fixing");
  CHECK(rep.outcome.verdict == Verdict::Member);
  CHECK_FALSE(rep.outcome.cut_dropped);
}

TEST_CASE("integral x with one fractional facility gets the rounded bound") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  auto rep = separate(inst, {{1, 0, 1, 0}, {0.6}});
  CHECK(rep.stage == "fixing");
  REQUIRE(rep.outcome.verdict == Verdict::Violated);
  CHECK(rep.outcome.provenance == Provenance::TrivialBound);
  CHECK(rep.outcome.violation == doctest::Approx(0.4));
  // lifted back to full strength: x1 + x3 + x4 <= y after lifting
  CHECK(oracle::cut_slack(inst, *rep.outcome.cut) <= 1e-9);
  CHECK(rep.outcome.cut->lhs_minus_rhs({{1, 0, 1, 0}, {0.6}}) > kViolationTol);
}

TEST_CASE("paid modules already covering the fractional demand certify membership") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  // x4 = 1 costs 50; y = 2.3 pays 120 >= 50 + 24: member regardless of x3
  auto rep = separate(inst, {{0, 0, 0.9, 1}, {2.3}});
  CHECK(rep.stage == "fixing");
  CHECK(rep.outcome.verdict == Verdict::Member);
}

TEST_CASE("worked single-facility run goes through the closed form") {
  ArcSetInstance inst({11, 15, 24, 50}, {100}, 0);
  auto rep = separate(inst, {{0.3, 0.5, 0.9, 0.1}, {0.38}});
  CHECK(rep.stage == "closed-form");
  CHECK(rep.closed_form_case == closed_form::CaseId::P5);
  REQUIRE(rep.outcome.verdict == Verdict::Violated);
  CHECK(rep.outcome.violation == doctest::Approx(0.52).epsilon(1e-12));
  CHECK(rep.outcome.cut->alpha == std::vector<double>{0, 0, 1, 0});
  CHECK(oracle::cut_slack(inst, *rep.outcome.cut) <= 1e-9);
}

TEST_CASE("fractional closed-form output is rescaled to integers") {
  ArcSetInstance inst({11, 15, 24, 50}, {90}, 0);
  auto rep = separate(inst, {{0.4, 0.5, 0.4, 0.4}, {0.47}});
  CHECK(rep.closed_form_case == closed_form::CaseId::P6b_2);
  REQUIRE(rep.outcome.verdict == Verdict::Violated);
  CHECK(rep.outcome.violation == doctest::Approx(17.0 / 30.0 - 0.47).epsilon(1e-9));
  CHECK(rep.outcome.cut->alpha == std::vector<double>{1, 1, 1, 1});
  CHECK(rep.outcome.cut->beta == std::vector<double>{3});
  CHECK(rep.outcome.cut->gamma == doctest::Approx(0.0));
  CHECK(rep.outcome.cut->integralized);
}

TEST_CASE("worked row-generation run") {
  ArcSetInstance inst({11, 15, 24, 50}, {60}, 0);
  auto rep = separate(inst, {{0.9, 0.5, 0.7, 0.1}, {0.7}});
  CHECK(rep.stage == "row-generation");
  REQUIRE(rep.outcome.verdict == Verdict::Violated);
  CHECK(rep.outcome.violation == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(rep.outcome.cut->alpha == std::vector<double>{1, 0, 0, 1});
  CHECK(rep.rowgen_iterations == rep.trace.size());
  CHECK(oracle::cut_slack(inst, *rep.outcome.cut) <= 1e-9);
}

TEST_CASE("pipeline verdict agrees with the membership oracle (random sweep)") {
  std::mt19937 rng(424242);
  int checked = 0, violated = 0;
  while (checked < 250) {
    std::size_t nq = 1 + rng() % 5, nt = 1 + rng() % 2;
    std::vector<Int> a(nq), b(nt);
    for (auto& v : a) v = 5 + Int(rng() % 60);
    b[0] = 10 + Int(rng() % 80);
    if (nt == 2) b[1] = b[0] + Int(rng() % 100);
    Int c = Int(rng() % 50) - 25;
    Int tot = 0;
    for (Int v : a) tot += v;
    if (tot - c <= 0) continue;
    ArcSetInstance inst(a, b, c);
    FracPoint p;
    p.x.resize(nq);
    p.y.resize(nt);
    for (auto& v : p.x) v = (rng() % 101) / 100.0;
    for (auto& v : p.y) v = (rng() % 200) / 100.0;

    auto rep = separate(inst, p);
    bool member = oracle::membership(inst, p);
    ++checked;
    if (rep.outcome.verdict == Verdict::Violated) {
      ++violated;
      CHECK_FALSE(member);
      CHECK(oracle::cut_slack(inst, *rep.outcome.cut) <= 1e-9);
      CHECK(rep.outcome.cut->lhs_minus_rhs(p) > kViolationTol);
    } else if (rep.outcome.cut_dropped) {
      CHECK_FALSE(member);
    } else {
      CHECK(member);
    }
  }
  CHECK(violated > 20);
}
