#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "osaas/core/catalog.hpp"
#include "osaas/core/line.hpp"
#include "osaas/modem/curve.hpp"

namespace osaas::probing {

enum class ProbeStatus { Working, Outage, Unusable };

std::string status_name(ProbeStatus s);

struct ProbeResult {
    std::string config_id;
    double symbol_rate_gbd = 0.0;
    double line_rate_gbps = 0.0;
    double carrier_thz = 0.0;
    PowerPolicy policy = ConstantPsd{0.0};
    double sim_time_h = 0.0;
    ProbeStatus status = ProbeStatus::Unusable;
    double pre_fec_ber = 0.5;
    std::optional<double> q_db;
    std::optional<double> gsnr_est_db;
    std::string note;
};

struct ProbeCampaign {
    MediaChannel media_channel;
    std::vector<ProbeResult> results;
};

// Configures one carrier, reads the BER and maps it through the config's curve.
ProbeResult probe_config(ProbeLine& line, const CurveSet& curves, const PltConfig& config, const PowerPolicy& policy,
                         double carrier_thz, double sim_time_h = 0.0);

// Every catalog config once at `center_thz`.
ProbeCampaign run_extended_probe(ProbeLine& line, const Catalog& catalog, const CurveSet& curves,
                                 const PowerPolicy& policy, double center_thz, double sim_time_h = 0.0);

nlohmann::json to_json(const PowerPolicy& policy);
nlohmann::json to_json(const ProbeResult& r);
nlohmann::json to_json(const ProbeCampaign& c);

}  // namespace osaas::probing
