#include "osaas/cli/monitor.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "osaas/core/errors.hpp"

namespace osaas::cli {

using nlohmann::json;

double carrier_slot_ghz(double symbol_rate_gbd) {
    return std::ceil(symbol_rate_gbd / kSlotGranularityGhz - 1e-9) * kSlotGranularityGhz;
}

double capacity_gain_gbps(double line_rate_gbps, double from_slot_ghz, double to_slot_ghz) {
    return line_rate_gbps * (kCBandGhz / to_slot_ghz - kCBandGhz / from_slot_ghz);
}

MonitorSeries run_monitor(ProbeLine& line, const Catalog& catalog, const CurveSet& curves, const PltConfig& config,
                          const PowerPolicy& policy, double center_thz, double duration_h, double interval_h) {
    if (!(interval_h > 0.0)) throw ConfigError("monitor interval must be positive");
    MonitorSeries s;
    s.config_id = config.id();
    const long n = std::lround(std::ceil(duration_h / interval_h - 1e-9));
    for (long i = 0; i < n; ++i) {
        const double t = i * interval_h;
        auto r = probing::probe_config(line, curves, config, policy, center_thz, t);
        s.samples.push_back({t, r.status, r.gsnr_est_db});
    }
    fit_diurnal(s);
    s.upgrade = find_upgrade(catalog, config, s.best_gsnr_db);
    return s;
}

void fit_diurnal(MonitorSeries& s) {
    std::vector<const MonitorSample*> w;
    for (const auto& p : s.samples) {
        if (p.gsnr_db) w.push_back(&p);
    }
    if (w.size() < 3) throw NoSignal("fewer than three working monitor samples");
    const int n = static_cast<int>(w.size());
    const double omega = 2.0 * std::numbers::pi / kDayH;
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        a(i, 0) = 1.0;
        a(i, 1) = std::sin(omega * w[i]->sim_time_h);
        a(i, 2) = std::cos(omega * w[i]->sim_time_h);
        y(i) = *w[i]->gsnr_db;
    }
    const Eigen::Vector3d c = a.colPivHouseholderQr().solve(y);
    const double amp = std::hypot(c(1), c(2));
    s.mean_gsnr_db = c(0);
    s.swing_db = 2.0 * amp;
    s.best_gsnr_db = c(0) + amp;
    // a·sin + b·cos = R·sin(ωt + φ), maximal at ωt + φ = π/2.
    double t = (std::numbers::pi / 2.0 - std::atan2(c(2), c(1))) / omega;
    t = std::fmod(t, kDayH);
    if (t < 0.0) t += kDayH;
    s.best_time_of_day_h = t;
}

std::optional<Upgrade> find_upgrade(const Catalog& catalog, const PltConfig& current, double best_gsnr_db) {
    const double from = carrier_slot_ghz(current.symbol_rate_gbd);
    const PltConfig* pick = nullptr;
    for (const auto& c : catalog) {
        if (c.line_rate_gbps != current.line_rate_gbps) continue;
        const double slot = carrier_slot_ghz(c.symbol_rate_gbd);
        if (!(slot < from) || !(best_gsnr_db - c.required_gsnr_db > 0.0)) continue;
        if (!pick || slot > carrier_slot_ghz(pick->symbol_rate_gbd)) pick = &c;
    }
    if (!pick) return std::nullopt;
    const double to = carrier_slot_ghz(pick->symbol_rate_gbd);
    return Upgrade{current.id(), pick->id(), from, to, capacity_gain_gbps(current.line_rate_gbps, from, to)};
}

json to_json(const MonitorSeries& s) {
    json j{{"config_id", s.config_id},
           {"samples", s.samples.size()},
           {"mean_gsnr_db", s.mean_gsnr_db},
           {"swing_db", s.swing_db},
           {"best_time_of_day_h", s.best_time_of_day_h},
           {"best_gsnr_db", s.best_gsnr_db}};
    if (s.upgrade) {
        j["upgrade"] = {{"from_config", s.upgrade->from_config},
                        {"to_config", s.upgrade->to_config},
                        {"from_slot_ghz", s.upgrade->from_slot_ghz},
                        {"to_slot_ghz", s.upgrade->to_slot_ghz},
                        {"c_band_capacity_gain_gbps", s.upgrade->capacity_gain_gbps}};
    } else {
        j["upgrade"] = nullptr;
    }
    return j;
}

std::string to_csv(const MonitorSeries& s) {
    std::ostringstream os;
    os << "sim_time_h,config_id,gsnr_db\n";
    for (const auto& p : s.samples) {
        os << std::fixed << std::setprecision(2) << p.sim_time_h << ',' << s.config_id << ',';
        if (p.gsnr_db) os << std::setprecision(4) << *p.gsnr_db;
        else os << (p.status == probing::ProbeStatus::Outage ? "OUTAGE" : "UNUSABLE");
        os << '\n';
    }
    return os.str();
}

}  // namespace osaas::cli
