#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "osaas/probing/campaign.hpp"

namespace osaas::probing {

enum class Regime { Linear, Nonlinear, NearOptimum };

std::string regime_name(Regime r);

inline constexpr double kRegimeDeadbandDb = 0.1;

struct RegimeEntry {
    std::string config_id;
    double symbol_rate_gbd = 0.0;
    std::optional<double> gsnr_const_psd_db;
    std::optional<double> gsnr_const_power_db;
    std::optional<double> delta_db;
    std::optional<Regime> regime;
    double recommended_power_delta_db = 0.0;
    std::string note;
};

struct RegimeReport {
    double psd_ref_dbm_per_ghz = 0.0;
    double rs_ref_gbd = 0.0;
    double power_ref_dbm = 0.0;
    std::vector<RegimeEntry> entries;
    ProbeCampaign const_psd;
    ProbeCampaign const_power;
};

// Δ = GSNR(constant power) − GSNR(constant PSD) per config up to rs_ref.
Regime classify_delta(double delta_db);

// Compares a constant-PSD campaign with a constant-total-power campaign at the
// power the reference symbol rate gets under that PSD.
RegimeReport detect_operation_regime(ProbeLine& line, const Catalog& catalog, const CurveSet& curves,
                                     double psd_ref_dbm_per_ghz, double rs_ref_gbd, double center_thz,
                                     double sim_time_h = 0.0);

nlohmann::json to_json(const RegimeReport& report);

}  // namespace osaas::probing
