#include "arcflow/io.hpp"

#include <fstream>
#include <sstream>

namespace arcflow::io {
namespace {

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

std::vector<Int> int_list(const json& j, const char* key) {
  return j.at(key).get<std::vector<Int>>();
}

}  // namespace

ArcSetFile load_arcset(const std::string& path) {
  json j = load_file(path);
  try {
    ArcSetInstance inst(int_list(j, "demands"), int_list(j, "capacities"),
                        j.at("existing").get<Int>());
    FracPoint point;
    point.x = j.at("point").at("x").get<std::vector<double>>();
    point.y = j.at("point").at("y").get<std::vector<double>>();
    if (point.x.size() != inst.num_commodities() || point.y.size() != inst.num_facilities())
      throw std::runtime_error("point dimensions do not match the instance");
    return {std::move(inst), std::move(point)};
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

CutInequality load_cut(const std::string& path) {
  json j = load_file(path);
  try {
    CutInequality cut;
    cut.alpha = j.at("alpha").get<std::vector<double>>();
    cut.beta = j.at("beta").get<std::vector<double>>();
    cut.gamma = j.at("gamma").get<double>();
    cut.integralized = j.value("integralized", false);
    return cut;
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

json cut_to_json(const CutInequality& cut) {
  return json{{"alpha", cut.alpha},
              {"beta", cut.beta},
              {"gamma", cut.gamma},
              {"integralized", cut.integralized}};
}

netdesign::NetworkInstance load_network(const std::string& path) {
  json j = load_file(path);
  try {
    netdesign::NetworkInstance inst;
    inst.nodes = j.at("nodes").get<int>();
    for (const auto& f : j.at("facilities"))
      inst.facilities.push_back({f.at("capacity").get<Int>(), f.at("cost").get<double>()});
    for (const auto& a : j.at("arcs")) {
      netdesign::Arc arc;
      arc.tail = a.at("tail").get<int>();
      arc.head = a.at("head").get<int>();
      arc.existing = a.value("existing", Int{0});
      if (a.contains("install_costs")) {
        arc.install_costs = a.at("install_costs").get<std::vector<double>>();
      } else {
        for (const auto& f : inst.facilities) arc.install_costs.push_back(f.cost);
      }
      inst.arcs.push_back(std::move(arc));
    }
    for (const auto& c : j.at("commodities")) {
      netdesign::Commodity com;
      com.source = c.at("source").get<int>();
      com.sink = c.at("sink").get<int>();
      com.demand = c.at("demand").get<Int>();
      const auto& rc = c.at("routing_costs");
      if (rc.is_number()) {
        com.routing_costs.assign(inst.arcs.size(), rc.get<double>());
      } else {
        com.routing_costs = rc.get<std::vector<double>>();
      }
      inst.commodities.push_back(std::move(com));
    }
    inst.normalize();
    inst.validate();
    return inst;
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

json network_to_json(const netdesign::NetworkInstance& inst) {
  json arcs = json::array();
  for (const auto& a : inst.arcs)
    arcs.push_back({{"tail", a.tail},
                    {"head", a.head},
                    {"existing", a.existing},
                    {"install_costs", a.install_costs}});
  json facilities = json::array();
  for (const auto& f : inst.facilities)
    facilities.push_back({{"capacity", f.capacity}, {"cost", f.cost}});
  json commodities = json::array();
  for (const auto& c : inst.commodities)
    commodities.push_back({{"source", c.source},
                           {"sink", c.sink},
                           {"demand", c.demand},
                           {"routing_costs", c.routing_costs}});
  return json{{"nodes", inst.nodes},
              {"arcs", arcs},
              {"facilities", facilities},
              {"commodities", commodities}};
}

void save_network(const netdesign::NetworkInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << network_to_json(inst).dump(2) << "\n";
}

json report_to_json(const separator::SeparationReport& rep) {
  json j;
  j["verdict"] = rep.outcome.verdict == Verdict::Violated ? "violated" : "member";
  j["stage"] = rep.stage;
  j["provenance"] = to_string(rep.outcome.provenance);
  j["violation"] = rep.outcome.violation;
  j["cut"] = rep.outcome.cut ? cut_to_json(*rep.outcome.cut) : json(nullptr);
  j["cut_dropped"] = rep.outcome.cut_dropped;
  j["closed_form_case"] = closed_form::to_string(rep.closed_form_case);
  j["iterations"] = rep.rowgen_iterations;
  json trace = json::array();
  for (const auto& it : rep.trace)
    trace.push_back({{"lp_value", it.lp_value},
                     {"knapsack_value", it.knapsack_value},
                     {"pool_size", it.pool_size}});
  j["trace"] = trace;
  json steps = json::array();
  for (const auto& s : rep.lift_steps) {
    const char* kind = s.kind == refine::LiftStep::Kind::XZero   ? "x_at_zero"
                       : s.kind == refine::LiftStep::Kind::XOne ? "x_at_one"
                                                                : "y_at_zero";
    steps.push_back({{"kind", kind}, {"index", s.index}, {"coefficient", s.coefficient}});
  }
  j["lift_steps"] = steps;
  j["scale_factor"] = rep.scale_factor;
  return j;
}

json report_to_json(const netdesign::RootLoopReport& rep) {
  json j;
  j["z_lp"] = rep.z_lp;
  j["z_root"] = rep.z_root;
  j["rounds"] = rep.rounds;
  j["cuts_added"] = rep.cuts_added;
  j["cuts_dropped"] = rep.cuts_dropped;
  j["cuts_by_provenance"] = rep.cuts_by_provenance;
  j["round_objectives"] = rep.round_objectives;
  j["z_ub"] = rep.z_ub ? json(*rep.z_ub) : json(nullptr);
  j["gap_closed"] = rep.gap_closed ? json(*rep.gap_closed) : json(nullptr);
  j["lp_integral"] = rep.lp_integral;
  return j;
}

namespace {

void render(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string name = prefix.empty() ? key : prefix + "." + key;
      render(value, name, out);
    }
  } else if (j.is_array()) {
    if (j.empty() || !(j.front().is_object() || j.front().is_array())) {
      out << prefix << ": " << j.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i)
        render(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream out;
  render(j, "", out);
  return out.str();
}

}  // namespace arcflow::io
