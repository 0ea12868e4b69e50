#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "arcflow/io.hpp"
#include "arcflow/netdesign.hpp"

using namespace arcflow;
using namespace arcflow::netdesign;

namespace {

NetworkInstance single_arc() {
  NetworkInstance inst;
  inst.nodes = 2;
  inst.arcs = {{0, 1, 0, {10000}}};
  inst.facilities = {{130, 10000}};
  inst.commodities = {{0, 1, 10, {0.0}}};
  return inst;
}

}  // namespace

TEST_CASE("the 27 published capacity/cost structures") {
  const auto& ps = profiles();
  REQUIRE(ps.size() == 27);

  const auto& p211 = profile_by_name("2_1_1");
  CHECK(p211.capacities == std::vector<Int>{130, 50});
  CHECK(p211.costs == std::vector<double>{10000, 5000});

  const auto& p131 = profile_by_name("1_3_1");
  CHECK(p131.capacities == std::vector<Int>{200});
  CHECK(p131.costs == std::vector<double>{10000});

  const auto& p323 = profile_by_name("3_2_3");
  CHECK(p323.capacities == std::vector<Int>{170, 70, 30});
  CHECK(p323.costs == std::vector<double>{25000, 13000, 9000});

  // this row appears in the published table with the size-2 module
  const auto& p133 = profile_by_name("1_3_3");
  CHECK(p133.capacities == std::vector<Int>{170});
  CHECK(p133.costs == std::vector<double>{25000});

  CHECK_THROWS_AS(profile_by_name("4_1_1"), std::invalid_argument);
}

TEST_CASE("generation is deterministic and well-formed") {
  const auto& p = profile_by_name("3_1_1");
  auto a = generate(42, 12, 5, p);
  auto b = generate(42, 12, 5, p);
  CHECK(io::network_to_json(a).dump() == io::network_to_json(b).dump());
  auto c = generate(43, 12, 5, p);
  CHECK(io::network_to_json(a).dump() != io::network_to_json(c).dump());

  CHECK(a.nodes == 12);
  CHECK(a.commodities.size() == 5);
  CHECK(a.arcs.size() == 36);  // min(3n, n(n-1))
  for (const auto& com : a.commodities) {
    CHECK(com.demand >= 10);
    CHECK(com.demand <= 190);
    for (double w : com.routing_costs) {
      CHECK(w >= 1.0);
      CHECK(w <= 10.0);
    }
  }
  CHECK_NOTHROW(a.validate());
  // facilities sorted by capacity
  for (std::size_t t = 1; t < a.facilities.size(); ++t)
    CHECK(a.facilities[t - 1].capacity <= a.facilities[t].capacity);
}

TEST_CASE("single-arc relaxation value and bounds") {
  auto inst = single_arc();
  auto nlp = lp_relaxation(inst);
  auto sol = lp::solve(nlp.model);
  REQUIRE(sol.status == lp::LpStatus::Optimal);
  CHECK(-sol.objective == doctest::Approx(10000.0 * 10.0 / 130.0).epsilon(1e-9));

  CHECK(upper_bound(inst) == doctest::Approx(10000.0));

  auto rep = root_cut_loop(inst);
  CHECK(rep.z_lp == doctest::Approx(10000.0 * 10.0 / 130.0).epsilon(1e-9));
  CHECK(rep.z_root == doctest::Approx(10000.0).epsilon(1e-6));
  REQUIRE(rep.z_ub);
  CHECK(*rep.z_ub == doctest::Approx(10000.0));
  REQUIRE(rep.gap_closed);
  CHECK(*rep.gap_closed == doctest::Approx(100.0).epsilon(1e-6));
}

TEST_CASE("unreachable sink makes the relaxation infeasible") {
  NetworkInstance inst;
  inst.nodes = 3;
  inst.arcs = {{0, 1, 0, {100}}};
  inst.facilities = {{50, 100}};
  inst.commodities = {{0, 2, 10, {1.0}}};
  CHECK_THROWS_AS(root_cut_loop(inst), LpInfeasible);
}

TEST_CASE("validation rejects malformed networks") {
  auto inst = single_arc();
  inst.commodities[0].demand = 0;
  CHECK_THROWS_AS(inst.validate(), std::invalid_argument);

  inst = single_arc();
  inst.arcs.push_back({0, 1, 0, {100}});  // duplicate pair
  CHECK_THROWS_AS(inst.validate(), std::invalid_argument);

  inst = single_arc();
  inst.arcs[0].install_costs = {1, 2};
  CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
}

TEST_CASE("gap arithmetic") {
  auto g = gap_closed(100.0, 150.0, 200.0);
  REQUIRE(g);
  CHECK(*g == doctest::Approx(50.0));
  CHECK_FALSE(gap_closed(100.0, 100.0, 100.0));
}

TEST_CASE("root loop on a generated instance: monotone and bounded") {
  auto inst = generate(7, 10, 4, profile_by_name("1_1_1"));
  auto rep = root_cut_loop(inst);
  CHECK(rep.rounds <= 50);
  CHECK(rep.z_root >= rep.z_lp - 1e-9);
  REQUIRE(rep.z_ub);
  CHECK(rep.z_root <= *rep.z_ub + 1e-6);
  double prev = rep.z_lp;
  for (double z : rep.round_objectives) {
    CHECK(z >= prev - 1e-6);
    prev = std::max(prev, z);
  }
  // the loop actually cut something off on this instance
  CHECK(rep.cuts_added > 0);
  CHECK(rep.z_root > rep.z_lp + 1e-6);
}

TEST_CASE("round-trip through the network JSON format") {
  auto inst = generate(11, 8, 3, profile_by_name("2_2_2"));
  auto j = io::network_to_json(inst);
  const std::string path = "roundtrip_net.json";
  io::save_network(inst, path);
  auto back = io::load_network(path);
  std::remove(path.c_str());
  CHECK(io::network_to_json(back).dump() == j.dump());
}
