#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "osaas/probing/campaign.hpp"

namespace osaas::probing {

inline constexpr double kDefaultThetaDb = 2.0;
// Configs whose predicted margin lies within this band are re-probed as verification signals.
inline constexpr double kVerificationBandDb = 1.5;
inline constexpr double kNoCap = std::numeric_limits<double>::infinity();

struct PenaltyEntry {
    std::string config_id;
    double symbol_rate_gbd;
    bool working;
    // +inf for configs without a working estimate.
    double penalty_db;
};

// Throws NoSignal without any Working result.
std::vector<PenaltyEntry> compute_penalties(const ProbeCampaign& campaign);

double detect_symbol_rate_cap(const std::vector<PenaltyEntry>& penalties, double theta_db = kDefaultThetaDb);

// Arithmetic mean (dB) of Working estimates at or below the cap. Throws NoSignal.
double estimate_link_gsnr(const ProbeCampaign& campaign, double cap_gbd);

struct MarginEntry {
    std::string config_id;
    double symbol_rate_gbd;
    double line_rate_gbps;
    double margin_db;
};

enum class VerificationStatus { FalsePredictions, NoFalsePredictions, Unverified };

std::string verification_name(VerificationStatus s);

struct Verification {
    double accuracy_bound_db = 0.0;
    VerificationStatus status = VerificationStatus::Unverified;
    std::vector<ProbeResult> evidence;
};

struct MarginReport {
    double gsnr_est_link_db = 0.0;
    double symbol_rate_cap_gbd = kNoCap;
    std::vector<MarginEntry> margins;
    std::optional<std::string> best_config;
    Verification verification;
};

// margin = estimate − required, for configs at or below the cap.
MarginReport compute_margins(double gsnr_est_link_db, const Catalog& catalog, double cap_gbd);

// Highest line rate with positive margin; ties by larger margin, then lower symbol rate.
std::optional<std::string> select_best_config(const MarginReport& report);

// Re-probes the near-zero-margin configs and returns the largest |margin| of a false prediction.
Verification verify_margin_accuracy(ProbeLine& line, const MarginReport& report, const Catalog& catalog,
                                    const CurveSet& curves, const PowerPolicy& policy, double center_thz,
                                    double sim_time_h = 0.0);

struct WorkflowOptions {
    double theta_db = kDefaultThetaDb;
    // When false every Working config feeds the estimate and the margins.
    bool cap_filtering = true;
    double sim_time_h = 0.0;
};

struct WorkflowResult {
    ProbeCampaign campaign;
    std::vector<PenaltyEntry> penalties;
    MarginReport report;
};

// Extended probe, penalties, cap, link estimate, margins, best config, verification.
WorkflowResult run_margin_workflow(ProbeLine& line, const Catalog& catalog, const CurveSet& curves,
                                   const PowerPolicy& policy, double center_thz, const WorkflowOptions& opts = {});

nlohmann::json to_json(const MarginReport& report);
nlohmann::json to_json(const std::vector<PenaltyEntry>& penalties);

}  // namespace osaas::probing
