#include "osaas/probing/campaign.hpp"

#include "osaas/core/errors.hpp"
#include "osaas/core/units.hpp"

namespace osaas::probing {

using nlohmann::json;

std::string status_name(ProbeStatus s) {
    switch (s) {
        case ProbeStatus::Working: return "Working";
        case ProbeStatus::Outage: return "Outage";
        case ProbeStatus::Unusable: return "Unusable";
    }
    return "?";
}

ProbeResult probe_config(ProbeLine& line, const CurveSet& curves, const PltConfig& config, const PowerPolicy& policy,
                         double carrier_thz, double sim_time_h) {
    ProbeResult r;
    r.config_id = config.id();
    r.symbol_rate_gbd = config.symbol_rate_gbd;
    r.line_rate_gbps = config.line_rate_gbps;
    r.carrier_thz = carrier_thz;
    r.policy = policy;
    r.sim_time_h = sim_time_h;

    auto curve = curves.find(r.config_id);
    if (curve == curves.end()) throw ConfigError("no characterization curve for " + r.config_id);

    BerReading reading;
    try {
        reading = line.probe(config, policy, carrier_thz, sim_time_h);
    } catch (const CarrierRejected& e) {
        r.note = e.what();
        return r;
    } catch (const LimitViolation& e) {
        r.note = e.what();
        return r;
    }
    r.pre_fec_ber = reading.pre_fec_ber;
    if (reading.pre_fec_ber > 0.0 && reading.pre_fec_ber < 0.5) r.q_db = q_from_ber(reading.pre_fec_ber);
    if (!reading.post_fec_ok) {
        r.status = ProbeStatus::Outage;
        return r;
    }
    if (!r.q_db) {
        r.note = "BER below the measurable range";
        return r;
    }
    try {
        r.gsnr_est_db = gsnr_from_q(curve->second, *r.q_db);
        r.status = ProbeStatus::Working;
    } catch (const OutOfRange& e) {
        r.note = e.what();
    }
    return r;
}

ProbeCampaign run_extended_probe(ProbeLine& line, const Catalog& catalog, const CurveSet& curves,
                                 const PowerPolicy& policy, double center_thz, double sim_time_h) {
    ProbeCampaign c;
    c.media_channel = line.media_channel();
    for (const auto& config : catalog) {
        c.results.push_back(probe_config(line, curves, config, policy, center_thz, sim_time_h));
    }
    return c;
}

json to_json(const PowerPolicy& policy) {
    if (auto* p = std::get_if<ConstantPsd>(&policy)) return {{"type", "ConstantPsd"}, {"psd_dbm_per_ghz", p->psd_dbm_per_ghz}};
    return {{"type", "ConstantTotalPower"}, {"power_dbm", std::get<ConstantTotalPower>(policy).power_dbm}};
}

json to_json(const ProbeResult& r) {
    json j{{"config_id", r.config_id},
           {"symbol_rate_gbd", r.symbol_rate_gbd},
           {"carrier_thz", r.carrier_thz},
           {"policy", to_json(r.policy)},
           {"sim_time_h", r.sim_time_h},
           {"status", status_name(r.status)},
           {"pre_fec_ber", r.pre_fec_ber}};
    j["q_db"] = r.q_db ? json(*r.q_db) : json(nullptr);
    j["gsnr_est_db"] = r.gsnr_est_db ? json(*r.gsnr_est_db) : json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const ProbeCampaign& c) {
    json arr = json::array();
    for (const auto& r : c.results) arr.push_back(to_json(r));
    return {{"media_channel",
             {{"center_frequency_thz", c.media_channel.center_frequency_thz}, {"width_ghz", c.media_channel.width_ghz}}},
            {"results", arr}};
}

}  // namespace osaas::probing
