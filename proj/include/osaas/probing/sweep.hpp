#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "osaas/probing/campaign.hpp"

namespace osaas::probing {

struct ProfilePoint {
    double carrier_thz;
    ProbeStatus status;
    std::optional<double> gsnr_db;
};

struct ConfigProfile {
    std::string config_id;
    double occupied_bandwidth_ghz = 0.0;
    std::vector<ProfilePoint> points;
    std::string note;
};

struct GsnrProfile {
    MediaChannel media_channel;
    double step_ghz = 0.0;
    std::vector<ConfigProfile> configs;

    // Throws ConfigError for unknown ids.
    const ConfigProfile& config(const std::string& id) const;
};

// Admissible carrier centres: MC centre + k·step with the occupied band inside the MC.
std::vector<double> sweep_centers(const MediaChannel& mc, const PltConfig& config, double step_ghz);

// Throws ConfigError when the step does not divide the MC width.
GsnrProfile run_frequency_sweep(ProbeLine& line, const std::vector<PltConfig>& configs, const CurveSet& curves,
                                double step_ghz, const PowerPolicy& policy, double sim_time_h = 0.0);

inline constexpr double kFlatProfileDb = 0.1;

struct Misalignment {
    double offset_ghz = 0.0;
    bool indeterminate = true;
    std::string config_id;
};

// Vertex of a parabola through the best point of the narrowest config and its neighbours.
Misalignment detect_misalignment(const GsnrProfile& profile);

struct TiltRipple {
    double tilt_db;
    double ripple_db;
};

// Least-squares line through the Working points; tilt is the slope over the MC width.
TiltRipple profile_tilt_ripple(const GsnrProfile& profile, const std::string& config_id);

nlohmann::json to_json(const GsnrProfile& profile);
// One row per probe: freq_thz,config_id,gsnr_db|OUTAGE|UNUSABLE
std::string to_csv(const GsnrProfile& profile);

}  // namespace osaas::probing
