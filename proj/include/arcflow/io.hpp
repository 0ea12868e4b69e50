#pragma once

#include <json.hpp>

#include "arcflow/netdesign.hpp"
#include "arcflow/separator.hpp"

namespace arcflow::io {

using nlohmann::json;

struct ArcSetFile {
  ArcSetInstance instance;
  FracPoint point;
};

// {"demands": [...], "capacities": [...], "existing": c,
//  "point": {"x": [...], "y": [...]}}
ArcSetFile load_arcset(const std::string& path);

// {"alpha": [...], "beta": [...], "gamma": g}
CutInequality load_cut(const std::string& path);

json cut_to_json(const CutInequality& cut);

netdesign::NetworkInstance load_network(const std::string& path);
json network_to_json(const netdesign::NetworkInstance& inst);
void save_network(const netdesign::NetworkInstance& inst, const std::string& path);

json report_to_json(const separator::SeparationReport& rep);
json report_to_json(const netdesign::RootLoopReport& rep);

// Flat human-readable rendering of a report object; no second code path.
std::string render_text(const json& j);

}  // namespace arcflow::io
