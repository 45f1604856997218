#include "osaas/probing/regime.hpp"

#include <cmath>

namespace osaas::probing {

using nlohmann::json;

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::Linear: return "Linear";
        case Regime::Nonlinear: return "Nonlinear";
        case Regime::NearOptimum: return "NearOptimum";
    }
    return "?";
}

Regime classify_delta(double delta_db) {
    if (delta_db > kRegimeDeadbandDb) return Regime::Linear;
    if (delta_db < -kRegimeDeadbandDb) return Regime::Nonlinear;
    return Regime::NearOptimum;
}

RegimeReport detect_operation_regime(ProbeLine& line, const Catalog& catalog, const CurveSet& curves,
                                     double psd_ref_dbm_per_ghz, double rs_ref_gbd, double center_thz,
                                     double sim_time_h) {
    RegimeReport rep;
    rep.psd_ref_dbm_per_ghz = psd_ref_dbm_per_ghz;
    rep.rs_ref_gbd = rs_ref_gbd;
    rep.power_ref_dbm = psd_ref_dbm_per_ghz + 10.0 * std::log10(rs_ref_gbd);

    Catalog subset;
    for (const auto& c : catalog) {
        if (c.symbol_rate_gbd <= rs_ref_gbd + 1e-9) subset.push_back(c);
    }
    rep.const_psd = run_extended_probe(line, subset, curves, ConstantPsd{psd_ref_dbm_per_ghz}, center_thz, sim_time_h);
    rep.const_power =
        run_extended_probe(line, subset, curves, ConstantTotalPower{rep.power_ref_dbm}, center_thz, sim_time_h);

    for (size_t i = 0; i < subset.size(); ++i) {
        const auto& a = rep.const_psd.results[i];
        const auto& b = rep.const_power.results[i];
        RegimeEntry e;
        e.config_id = a.config_id;
        e.symbol_rate_gbd = a.symbol_rate_gbd;
        e.gsnr_const_psd_db = a.gsnr_est_db;
        e.gsnr_const_power_db = b.gsnr_est_db;
        const double step = 10.0 * std::log10(rs_ref_gbd / a.symbol_rate_gbd);
        const bool wa = a.status == ProbeStatus::Working, wb = b.status == ProbeStatus::Working;
        if (a.status == ProbeStatus::Unusable || b.status == ProbeStatus::Unusable) {
            e.note = "unusable measurement; excluded";
        } else if (std::abs(step) < 1e-12) {
            // Same launch power in both campaigns.
            e.delta_db = 0.0;
            e.regime = Regime::NearOptimum;
        } else if (wa && wb) {
            e.delta_db = *b.gsnr_est_db - *a.gsnr_est_db;
            e.regime = classify_delta(*e.delta_db);
        } else if (wa) {
            e.regime = Regime::Nonlinear;
            e.note = "outage at constant total power";
        } else if (wb) {
            e.regime = Regime::Linear;
            e.note = "outage at constant PSD";
        } else {
            e.note = "outage in both campaigns; excluded";
        }
        if (e.regime == Regime::Linear) e.recommended_power_delta_db = step;
        else if (e.regime == Regime::Nonlinear) e.recommended_power_delta_db = -step;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

json to_json(const RegimeReport& report) {
    auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    json entries = json::array();
    for (const auto& e : report.entries) {
        json j{{"config_id", e.config_id},
               {"symbol_rate_gbd", e.symbol_rate_gbd},
               {"gsnr_const_psd_db", opt(e.gsnr_const_psd_db)},
               {"gsnr_const_power_db", opt(e.gsnr_const_power_db)},
               {"delta_db", opt(e.delta_db)},
               {"regime", e.regime ? json(regime_name(*e.regime)) : json(nullptr)},
               {"recommended_power_delta_db", e.recommended_power_delta_db}};
        if (!e.note.empty()) j["note"] = e.note;
        entries.push_back(j);
    }
    return {{"psd_ref_dbm_per_ghz", report.psd_ref_dbm_per_ghz},
            {"rs_ref_gbd", report.rs_ref_gbd},
            {"power_ref_dbm", report.power_ref_dbm},
            {"entries", entries},
            {"const_psd_campaign", to_json(report.const_psd)},
            {"const_power_campaign", to_json(report.const_power)}};
}

}  // namespace osaas::probing
