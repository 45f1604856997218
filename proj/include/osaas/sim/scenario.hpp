#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "osaas/modem/ber.hpp"
#include "osaas/sim/link.hpp"

namespace osaas::sim {

inline constexpr int kScenarioSchemaVersion = 1;

struct MonitorSpec {
    std::string config_id;
    double duration_h = 48.0;
    double interval_h = 1.0;
};

struct Scenario {
    LinkSpec link;
    PowerPolicy policy = ConstantPsd{-23.0};
    double sweep_step_ghz = 6.25;
    std::vector<std::string> sweep_configs;
    std::optional<MonitorSpec> monitor;
    // snr_modem per config id, applied to characterization and probing alike.
    std::map<std::string, double> modem_snr_db;

    ModemModel modem_model() const;
};

nlohmann::json to_json(const LinkSpec& link);
LinkSpec link_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Scenario& s);
// Throws ScenarioError on malformed or invalid input.
Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace osaas::sim
