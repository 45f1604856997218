#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "osaas/probing/analysis.hpp"
#include "osaas/sim/scenario.hpp"
#include "osaas/sim/simulated_line.hpp"

namespace osaas::cli {

inline constexpr int kReportSchemaVersion = 1;

std::unique_ptr<sim::SimulatedLine> make_line(const sim::Scenario& scenario, std::uint64_t seed);

struct ThroughputEntry {
    std::string scenario;
    double achievable_gbps = 0.0;
    double potential_gbps = 0.0;
    std::optional<double> gain_percent;
    std::optional<std::string> achievable_config;
    std::optional<std::string> potential_config;
    double forty_channel_gain_gbps = 0.0;
};

inline constexpr int kExtrapolationChannels = 40;

// Best config under the cap versus the same workflow on the line with its
// filters removed. The second half needs simulator access.
ThroughputEntry throughput_analysis(const sim::Scenario& scenario, const Catalog& catalog, const CurveSet& curves,
                                    std::uint64_t seed, double theta_db);

nlohmann::json to_json(const ThroughputEntry& e);

}  // namespace osaas::cli
