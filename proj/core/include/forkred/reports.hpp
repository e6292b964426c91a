#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "forkred/explore.hpp"
#include "forkred/reddening.hpp"
#include "forkred/structure.hpp"
#include "forkred/verify.hpp"

namespace forkred {

nlohmann::json to_json(const StructureClass& cls);
nlohmann::json to_json(const ReddeningResult& res);
nlohmann::json to_json(const URedReport& report);
nlohmann::json to_json(const BaseConditionReport& report);
nlohmann::json to_json(const TrajectoryStep& step);
nlohmann::json to_json(const TrajectoryReport& report);
nlohmann::json to_json(const CoherenceVerdict& verdict);
nlohmann::json to_json(const NoAllRedVerdict& verdict);
nlohmann::json to_json(const ExploreStats& stats);

/// One JSON line per trajectory step.
std::vector<std::string> trajectory_jsonl(const TrajectoryReport& report);

}  // namespace forkred
