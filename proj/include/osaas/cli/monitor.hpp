#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "osaas/probing/campaign.hpp"

namespace osaas::cli {

inline constexpr double kCBandGhz = 4800.0;
inline constexpr double kSlotGranularityGhz = 12.5;
inline constexpr double kDayH = 24.0;

struct MonitorSample {
    double sim_time_h;
    probing::ProbeStatus status;
    std::optional<double> gsnr_db;
};

struct Upgrade {
    std::string from_config;
    std::string to_config;
    double from_slot_ghz;
    double to_slot_ghz;
    double capacity_gain_gbps;
};

struct MonitorSeries {
    std::string config_id;
    std::vector<MonitorSample> samples;
    double mean_gsnr_db = 0.0;
    // Peak-to-peak of the fitted 24 h harmonic.
    double swing_db = 0.0;
    double best_time_of_day_h = 0.0;
    double best_gsnr_db = 0.0;
    std::optional<Upgrade> upgrade;
};

// Slot on the 12.5 GHz grid for a carrier: ceil(Rs / 12.5) · 12.5.
double carrier_slot_ghz(double symbol_rate_gbd);

// C-band capacity change when a carrier moves to a narrower slot at the same line rate.
double capacity_gain_gbps(double line_rate_gbps, double from_slot_ghz, double to_slot_ghz);

// Repeated single-config probes at t = 0, interval, ... < duration.
MonitorSeries run_monitor(ProbeLine& line, const Catalog& catalog, const CurveSet& curves, const PltConfig& config,
                          const PowerPolicy& policy, double center_thz, double duration_h, double interval_h);

// Least-squares fit y = c + a·sin(ωt) + b·cos(ωt), ω = 2π/24 h, over Working samples.
void fit_diurnal(MonitorSeries& series);

// Next narrower slot at the same line rate whose required GSNR is met at the best window.
std::optional<Upgrade> find_upgrade(const Catalog& catalog, const PltConfig& current, double best_gsnr_db);

nlohmann::json to_json(const MonitorSeries& s);
std::string to_csv(const MonitorSeries& s);

}  // namespace osaas::cli
