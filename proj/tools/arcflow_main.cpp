#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "arcflow/io.hpp"
#include "arcflow/knapsack.hpp"
#include "arcflow/oracle.hpp"

namespace {

using arcflow::io::json;

void print_report(const json& j, const std::string& format) {
  if (format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << arcflow::io::render_text(j);
}

int run_separate(const std::string& file, const std::string& lift_order,
                 const std::string& format) {
  arcflow::io::ArcSetFile in = arcflow::io::load_arcset(file);
  arcflow::separator::SeparateOptions opts;
  opts.lift_order = arcflow::refine::parse_lift_order(lift_order);
  auto rep = arcflow::separator::separate(in.instance, in.point, opts);
  print_report(arcflow::io::report_to_json(rep), format);
  return rep.outcome.verdict == arcflow::Verdict::Violated ? 1 : 0;
}

int run_verify(const std::string& inst_file, const std::string& cut_file,
               const std::string& format) {
  arcflow::io::ArcSetFile in = arcflow::io::load_arcset(inst_file);
  arcflow::CutInequality cut = arcflow::io::load_cut(cut_file);
  auto best = arcflow::knapsack::maximize(cut.alpha, cut.beta, cut.gamma, in.instance);
  json j;
  j["valid"] = best.value <= 1e-9;
  j["max_value"] = best.value;
  j["witness"] = {{"x", best.x}, {"y", best.y}};
  j["violation_at_point"] = cut.lhs_minus_rhs(in.point);
  if (best.value <= 1e-9) {
    std::size_t rank = arcflow::oracle::facet_rank(in.instance, cut);
    j["facet_rank"] = rank;
    j["facet"] = rank == in.instance.num_commodities() + in.instance.num_facilities();
  }
  print_report(j, format);
  return 0;
}

int run_oracle_check(const std::string& file, const std::string& format) {
  arcflow::io::ArcSetFile in = arcflow::io::load_arcset(file);
  json j;
  bool member = arcflow::oracle::membership(in.instance, in.point);
  j["member"] = member;
  if (!arcflow::screen_trivial(in.instance, in.point)) {
    auto full = arcflow::oracle::full_separation(in.instance, in.point);
    j["separation_value"] = full.value;
    j["cut"] = arcflow::io::cut_to_json(full.cut);
  }
  print_report(j, format);
  return member ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact separation for unsplittable flow arc sets and a root cutting-plane loop"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* sep = app.add_subcommand("separate", "Separate a fractional point from an arc set");
  std::string sep_file, lift_order = "lift4";
  sep->add_option("--instance", sep_file, "Arc-set instance + point (JSON)")->required();
  sep->add_option("--lift-order", lift_order, "Lifting order")
      ->check(CLI::IsMember({"lift1", "lift2", "lift3", "lift4"}));

  auto* ver = app.add_subcommand("verify", "Check a cut's validity and facet rank");
  std::string ver_inst, ver_cut;
  ver->add_option("--instance", ver_inst, "Arc-set instance + point (JSON)")->required();
  ver->add_option("--cut", ver_cut, "Cut file (JSON)")->required();

  auto* loop = app.add_subcommand("cutloop", "Root cutting-plane loop on a network instance");
  std::string loop_file, loop_gen, loop_lift = "lift4";
  loop->add_option("--instance", loop_file, "Network instance file (JSON)");
  loop->add_option("--gen", loop_gen, "profile,seed,nodes,commodities");
  loop->add_option("--lift-order", loop_lift, "Lifting order")
      ->check(CLI::IsMember({"lift1", "lift2", "lift3", "lift4"}));

  auto* gen = app.add_subcommand("gen", "Generate a network instance");
  std::string gen_profile = "3_1_1", gen_out;
  std::uint32_t gen_seed = 1;
  int gen_nodes = 12, gen_commodities = 5;
  gen->add_option("--profile", gen_profile, "Capacity/cost profile name");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--nodes", gen_nodes, "Node count");
  gen->add_option("--commodities", gen_commodities, "Commodity count");
  gen->add_option("--output", gen_out, "Write the instance here instead of stdout");

  auto* orc = app.add_subcommand("oracle-check", "Small-instance membership oracle");
  std::string orc_file;
  orc->add_option("--instance", orc_file, "Arc-set instance + point (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sep) return run_separate(sep_file, lift_order, format);
    if (*ver) return run_verify(ver_inst, ver_cut, format);
    if (*orc) return run_oracle_check(orc_file, format);
    if (*gen) {
      auto inst = arcflow::netdesign::generate(
          gen_seed, gen_nodes, gen_commodities, arcflow::netdesign::profile_by_name(gen_profile));
      if (gen_out.empty()) print_report(arcflow::io::network_to_json(inst), format);
      else arcflow::io::save_network(inst, gen_out);
      return 0;
    }
    if (*loop) {
      arcflow::netdesign::NetworkInstance inst = [&] {
        if (!loop_gen.empty()) {
          std::string profile;
          std::uint32_t seed = 1;
          int nodes = 12, commodities = 5;
          std::stringstream ss(loop_gen);
          std::string tok;
          std::getline(ss, profile, ',');
          if (std::getline(ss, tok, ',')) seed = std::uint32_t(std::stoul(tok));
          if (std::getline(ss, tok, ',')) nodes = std::stoi(tok);
          if (std::getline(ss, tok, ',')) commodities = std::stoi(tok);
          return arcflow::netdesign::generate(seed, nodes, commodities,
                                              arcflow::netdesign::profile_by_name(profile));
        }
        if (loop_file.empty()) throw std::runtime_error("cutloop needs --instance or --gen");
        return arcflow::io::load_network(loop_file);
      }();
      arcflow::netdesign::RootLoopSettings settings;
      settings.lift_order = arcflow::refine::parse_lift_order(loop_lift);
      try {
        auto rep = arcflow::netdesign::root_cut_loop(inst, settings);
        print_report(arcflow::io::report_to_json(rep), format);
        return 0;
      } catch (const arcflow::netdesign::LpInfeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
      }
    }
  } catch (const arcflow::oracle::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
