#include "osaas/sim/scenario.hpp"

#include <cmath>
#include <fstream>

#include "osaas/core/errors.hpp"
#include "osaas/core/units.hpp"

namespace osaas::sim {

using nlohmann::json;

namespace {

std::string comp_name(DispersionComp c) {
    switch (c) {
        case DispersionComp::None: return "None";
        case DispersionComp::Dcf: return "DCF";
        case DispersionComp::Dcg: return "DCG";
    }
    return "None";
}

DispersionComp parse_comp(const std::string& s) {
    if (s == "None") return DispersionComp::None;
    if (s == "DCF") return DispersionComp::Dcf;
    if (s == "DCG") return DispersionComp::Dcg;
    throw ScenarioError("unknown dispersion_comp '" + s + "'");
}

json filter_json(const FilterElement& f) {
    return {{"center_offset_ghz", f.center_offset_ghz}, {"bandwidth_3db_ghz", f.bandwidth_3db_ghz}, {"order", f.order}};
}

FilterElement parse_filter(const json& j) {
    return {j.at("center_offset_ghz").get<double>(), j.at("bandwidth_3db_ghz").get<double>(), j.at("order").get<int>()};
}

json policy_json(const PowerPolicy& p) {
    if (auto* c = std::get_if<ConstantPsd>(&p)) return {{"type", "ConstantPsd"}, {"psd_dbm_per_ghz", c->psd_dbm_per_ghz}};
    return {{"type", "ConstantTotalPower"}, {"power_dbm", std::get<ConstantTotalPower>(p).power_dbm}};
}

PowerPolicy parse_policy(const json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "ConstantPsd") return ConstantPsd{j.at("psd_dbm_per_ghz").get<double>()};
    if (type == "ConstantTotalPower") return ConstantTotalPower{j.at("power_dbm").get<double>()};
    throw ScenarioError("unknown policy type '" + type + "'");
}

}  // namespace

ModemModel Scenario::modem_model() const {
    auto m = ModemModel::matched();
    for (const auto& [id, v] : modem_snr_db) m.set(id, v);
    return m;
}

json to_json(const LinkSpec& link) {
    json spans = json::array();
    for (const auto& s : link.spans) {
        spans.push_back({{"length_km", s.length_km},
                         {"loss_db", s.loss_db},
                         {"amp_gain_db", s.amp_gain_db},
                         {"amp_noise_figure_db", s.amp_noise_figure_db},
                         {"nli_coeff_per_mw2", s.nli_coeff_per_mw2},
                         {"dispersion_comp", comp_name(s.dispersion_comp)}});
    }
    json filters = json::array();
    for (const auto& f : link.filters) filters.push_back(filter_json(f));
    json eqs = json::array();
    for (const auto& e : link.equalizers) {
        eqs.push_back({{"position", e.position},
                       {"granularity", e.node.granularity == EqGranularity::PerNmc ? "PerNmc" : "PerMediaChannel"},
                       {"target_psd_dbm_per_ghz", e.node.target_psd_dbm_per_ghz},
                       {"nmc_width_ghz", e.node.nmc_width_ghz}});
    }
    json ripple = json::array();
    for (const auto& r : link.ripple) ripple.push_back({r.offset_ghz, r.db});
    const auto& mc = link.media_channel;
    return {{"name", link.name},
            {"description", link.description},
            {"seed", link.seed},
            {"measurement_noise_db", link.measurement_noise_db},
            {"isi_factor", link.isi_factor},
            {"rs_ref_gbd", link.rs_ref_gbd},
            {"media_channel",
             {{"center_frequency_thz", mc.center_frequency_thz},
              {"width_ghz", mc.width_ghz},
              {"max_total_power_dbm", mc.max_total_power_dbm},
              {"max_psd_dbm_per_ghz", mc.max_psd_dbm_per_ghz}}},
            {"spans", spans},
            {"filters", filters},
            {"dcg_filter", filter_json(link.dcg_filter)},
            {"equalizers", eqs},
            {"tilt_db_per_mc", link.tilt_db_per_mc},
            {"ripple", ripple},
            {"diurnal_amplitude_db", link.diurnal_amplitude_db},
            {"diurnal_period_h", link.diurnal_period_h}};
}

LinkSpec link_from_json(const json& j) {
    LinkSpec l;
    l.name = j.at("name").get<std::string>();
    l.description = j.value("description", "");
    l.seed = j.value("seed", std::uint64_t{1});
    l.measurement_noise_db = j.value("measurement_noise_db", 0.05);
    l.isi_factor = j.value("isi_factor", 2.0);
    l.rs_ref_gbd = j.value("rs_ref_gbd", 69.4);
    const auto& mc = j.at("media_channel");
    l.media_channel.center_frequency_thz = mc.at("center_frequency_thz").get<double>();
    l.media_channel.width_ghz = mc.at("width_ghz").get<double>();
    l.media_channel.max_total_power_dbm = mc.at("max_total_power_dbm").get<double>();
    l.media_channel.max_psd_dbm_per_ghz = mc.at("max_psd_dbm_per_ghz").get<double>();
    for (const auto& s : j.at("spans")) {
        SpanSpec sp;
        sp.length_km = s.at("length_km").get<double>();
        sp.loss_db = s.at("loss_db").get<double>();
        sp.amp_gain_db = s.value("amp_gain_db", sp.loss_db);
        sp.amp_noise_figure_db = s.at("amp_noise_figure_db").get<double>();
        sp.nli_coeff_per_mw2 = s.value("nli_coeff_per_mw2", 0.0);
        sp.dispersion_comp = parse_comp(s.value("dispersion_comp", "None"));
        l.spans.push_back(sp);
    }
    for (const auto& f : j.value("filters", json::array())) l.filters.push_back(parse_filter(f));
    if (j.contains("dcg_filter")) l.dcg_filter = parse_filter(j.at("dcg_filter"));
    for (const auto& e : j.value("equalizers", json::array())) {
        PlacedEqualizer pe;
        pe.position = e.at("position").get<int>();
        const auto g = e.at("granularity").get<std::string>();
        if (g == "PerNmc") pe.node.granularity = EqGranularity::PerNmc;
        else if (g == "PerMediaChannel") pe.node.granularity = EqGranularity::PerMediaChannel;
        else throw ScenarioError("unknown equalizer granularity '" + g + "'");
        pe.node.target_psd_dbm_per_ghz = e.value("target_psd_dbm_per_ghz", 0.0);
        pe.node.nmc_width_ghz = e.value("nmc_width_ghz", 75.0);
        l.equalizers.push_back(pe);
    }
    l.tilt_db_per_mc = j.value("tilt_db_per_mc", 0.0);
    for (const auto& r : j.value("ripple", json::array())) l.ripple.push_back({r.at(0).get<double>(), r.at(1).get<double>()});
    l.diurnal_amplitude_db = j.value("diurnal_amplitude_db", 0.0);
    l.diurnal_period_h = j.value("diurnal_period_h", 24.0);
    return l;
}

json to_json(const Scenario& s) {
    json j = to_json(s.link);
    j["schema_version"] = kScenarioSchemaVersion;
    j["policy"] = policy_json(s.policy);
    j["sweep_step_ghz"] = s.sweep_step_ghz;
    j["sweep_configs"] = s.sweep_configs;
    if (s.monitor) {
        j["monitor"] = {{"config", s.monitor->config_id},
                        {"duration_h", s.monitor->duration_h},
                        {"interval_h", s.monitor->interval_h}};
    }
    if (!s.modem_snr_db.empty()) j["modem_snr_db"] = s.modem_snr_db;
    return j;
}

Scenario scenario_from_json(const json& j) {
    try {
        const int version = j.at("schema_version").get<int>();
        if (version != kScenarioSchemaVersion) {
            throw ScenarioError("unsupported schema_version " + std::to_string(version));
        }
        Scenario s;
        s.link = link_from_json(j);
        s.policy = parse_policy(j.at("policy"));
        s.sweep_step_ghz = j.value("sweep_step_ghz", 6.25);
        s.sweep_configs = j.value("sweep_configs", std::vector<std::string>{});
        if (j.contains("monitor")) {
            const auto& m = j.at("monitor");
            s.monitor = MonitorSpec{m.at("config").get<std::string>(), m.value("duration_h", 48.0),
                                    m.value("interval_h", 1.0)};
        }
        if (j.contains("modem_snr_db")) s.modem_snr_db = j.at("modem_snr_db").get<std::map<std::string, double>>();
        s.link.validate();
        if (!(s.sweep_step_ghz > 0.0)) throw ScenarioError("sweep step must be positive");
        return s;
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("malformed scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ScenarioError(path.string() + ": " + e.what());
    }
    return scenario_from_json(j);
}

}  // namespace osaas::sim
