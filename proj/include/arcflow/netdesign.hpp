#pragma once

#include <map>

#include "arcflow/arcset.hpp"
#include "arcflow/lp.hpp"
#include "arcflow/refine.hpp"

namespace arcflow::netdesign {

struct Arc {
  int tail = 0;
  int head = 0;
  Int existing = 0;
  std::vector<double> install_costs;  // one per facility
};

struct Facility {
  Int capacity = 0;
  double cost = 0.0;
};

struct Commodity {
  int source = 0;
  int sink = 0;
  Int demand = 0;
  std::vector<double> routing_costs;  // one per arc
};

struct NetworkInstance {
  int nodes = 0;
  std::vector<Arc> arcs;
  std::vector<Facility> facilities;  // kept sorted by capacity
  std::vector<Commodity> commodities;

  void validate() const;
  // Sorts facilities by capacity (arc install costs follow) so per-arc
  // capacitated sets line up with the sorted-capacity convention.
  void normalize();
};

struct Profile {
  std::string name;
  std::vector<Int> capacities;
  std::vector<double> costs;
};

// The 27 capacity/cost structures of the benchmark family, as published.
const std::vector<Profile>& profiles();
const Profile& profile_by_name(const std::string& name);

NetworkInstance generate(std::uint32_t seed, int nodes, int commodities,
                         const Profile& profile);

// Variable layout of the relaxation: x vars first (commodity-major), then y
// vars (arc-major).
struct NetworkLp {
  lp::LpModel model;  // maximization of the negated cost
  std::size_t num_arcs = 0;
  std::size_t num_commodities = 0;
  std::size_t num_facilities = 0;

  std::size_t x_var(std::size_t q, std::size_t e) const { return q * num_arcs + e; }
  std::size_t y_var(std::size_t e, std::size_t t) const {
    return num_commodities * num_arcs + e * num_facilities + t;
  }
};

NetworkLp lp_relaxation(const NetworkInstance& inst);

struct RootLoopSettings {
  std::size_t max_rounds = 50;
  double rel_improvement = 1e-4;
  refine::LiftOrder lift_order = refine::LiftOrder::Lift4;
  bool compute_upper_bound = true;
};

struct RootLoopReport {
  double z_lp = 0.0;
  double z_root = 0.0;
  std::size_t rounds = 0;
  std::map<std::string, std::size_t> cuts_by_provenance;
  std::size_t cuts_added = 0;
  std::size_t cuts_dropped = 0;
  std::vector<double> round_objectives;  // objective after each round's resolve
  std::optional<double> z_ub;
  std::optional<double> gap_closed;
  bool lp_integral = false;  // relaxation optimum already integral
};

struct LpInfeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootLoopReport root_cut_loop(const NetworkInstance& inst, const RootLoopSettings& settings = {});

// 100 (z_root - z_lp) / (z_ub - z_lp); nullopt when the denominator is
// below 1e-9.
std::optional<double> gap_closed(double z_lp, double z_root, double z_ub);

// Feasible integral solution: route each commodity on its cheapest path,
// then buy the cheapest module cover per arc.
double upper_bound(const NetworkInstance& inst);

}  // namespace arcflow::netdesign
