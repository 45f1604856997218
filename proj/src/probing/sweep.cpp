#include "osaas/probing/sweep.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "osaas/core/errors.hpp"
#include "osaas/core/units.hpp"

namespace osaas::probing {

using nlohmann::json;

const ConfigProfile& GsnrProfile::config(const std::string& id) const {
    for (const auto& c : configs) {
        if (c.config_id == id) return c;
    }
    throw ConfigError("config " + id + " not in profile");
}

std::vector<double> sweep_centers(const MediaChannel& mc, const PltConfig& config, double step_ghz) {
    const GridUnits step = to_grid(step_ghz);
    const GridUnits half_width = to_grid(mc.width_ghz / 2.0);
    std::vector<double> out;
    if (step <= 0) return out;
    for (GridUnits k = -(half_width / step); k <= half_width / step; ++k) {
        const double f = mc.center_frequency_thz + from_grid(k * step) / 1000.0;
        if (mc.fits(config, f)) out.push_back(f);
    }
    return out;
}

GsnrProfile run_frequency_sweep(ProbeLine& line, const std::vector<PltConfig>& configs, const CurveSet& curves,
                                double step_ghz, const PowerPolicy& policy, double sim_time_h) {
    const auto& mc = line.media_channel();
    if (!(step_ghz > 0.0) || !divides_on_grid(mc.width_ghz, step_ghz)) {
        throw ConfigError("sweep step " + std::to_string(step_ghz) + " GHz does not divide the " +
                          std::to_string(mc.width_ghz) + " GHz media channel");
    }
    GsnrProfile prof;
    prof.media_channel = mc;
    prof.step_ghz = step_ghz;
    for (const auto& c : configs) {
        ConfigProfile cp;
        cp.config_id = c.id();
        cp.occupied_bandwidth_ghz = c.occupied_bandwidth_ghz();
        const auto centers = sweep_centers(mc, c, step_ghz);
        if (centers.empty()) cp.note = "occupied band wider than the media channel; skipped";
        for (double f : centers) {
            auto r = probe_config(line, curves, c, policy, f, sim_time_h);
            cp.points.push_back({f, r.status, r.gsnr_est_db});
        }
        prof.configs.push_back(std::move(cp));
    }
    return prof;
}

namespace {

double offset_ghz(const MediaChannel& mc, double f_thz) { return (f_thz - mc.center_frequency_thz) * 1000.0; }

}  // namespace

Misalignment detect_misalignment(const GsnrProfile& profile) {
    const ConfigProfile* narrow = nullptr;
    for (const auto& c : profile.configs) {
        const auto working = std::count_if(c.points.begin(), c.points.end(),
                                           [](const auto& p) { return p.status == ProbeStatus::Working; });
        if (working < 3) continue;
        if (!narrow || c.occupied_bandwidth_ghz < narrow->occupied_bandwidth_ghz) narrow = &c;
    }
    if (!narrow) throw InsufficientData("no configuration with three working sweep points");

    std::vector<double> x, y;
    for (const auto& p : narrow->points) {
        if (p.status == ProbeStatus::Working) {
            x.push_back(offset_ghz(profile.media_channel, p.carrier_thz));
            y.push_back(*p.gsnr_db);
        }
    }
    Misalignment m;
    m.config_id = narrow->config_id;
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    if (*hi - *lo < kFlatProfileDb) return m;
    m.indeterminate = false;

    const size_t best = static_cast<size_t>(hi - y.begin());
    const size_t mid = std::clamp<size_t>(best, 1, x.size() - 2);
    const double x0 = x[mid - 1], x1 = x[mid], x2 = x[mid + 1];
    const double y0 = y[mid - 1], y1 = y[mid], y2 = y[mid + 1];
    // Lagrange parabola through the three points.
    const double d0 = y0 / ((x0 - x1) * (x0 - x2));
    const double d1 = y1 / ((x1 - x0) * (x1 - x2));
    const double d2 = y2 / ((x2 - x0) * (x2 - x1));
    const double a = d0 + d1 + d2;
    const double b = -(d0 * (x1 + x2) + d1 * (x0 + x2) + d2 * (x0 + x1));
    double vertex = a < 0.0 ? -b / (2.0 * a) : x[best];
    vertex = std::clamp(vertex, x0, x2);
    m.offset_ghz = std::round(vertex * 10.0) / 10.0;
    return m;
}

TiltRipple profile_tilt_ripple(const GsnrProfile& profile, const std::string& config_id) {
    const auto& cp = profile.config(config_id);
    std::vector<double> x, y;
    for (const auto& p : cp.points) {
        if (p.status == ProbeStatus::Working) {
            x.push_back(offset_ghz(profile.media_channel, p.carrier_thz));
            y.push_back(*p.gsnr_db);
        }
    }
    if (x.size() < 4) throw InsufficientData(config_id + ": fewer than four working sweep points");
    const int n = static_cast<int>(x.size());
    Eigen::MatrixXd a(n, 2);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) {
        a(i, 0) = 1.0;
        a(i, 1) = x[i];
        v(i) = y[i];
    }
    const Eigen::Vector2d c = a.colPivHouseholderQr().solve(v);
    double ripple = 0.0;
    for (int i = 0; i < n; ++i) ripple = std::max(ripple, std::abs(v(i) - c(0) - c(1) * x[i]));
    return {std::abs(c(1) * profile.media_channel.width_ghz), ripple};
}

json to_json(const GsnrProfile& profile) {
    json configs = json::array();
    for (const auto& c : profile.configs) {
        json pts = json::array();
        for (const auto& p : c.points) {
            pts.push_back({{"carrier_thz", p.carrier_thz},
                           {"status", status_name(p.status)},
                           {"gsnr_db", p.gsnr_db ? json(*p.gsnr_db) : json(nullptr)}});
        }
        json jc{{"config_id", c.config_id}, {"points", pts}};
        if (!c.note.empty()) jc["note"] = c.note;
        configs.push_back(jc);
    }
    return {{"step_ghz", profile.step_ghz}, {"configs", configs}};
}

std::string to_csv(const GsnrProfile& profile) {
    std::ostringstream os;
    os << "freq_thz,config_id,gsnr_db\n";
    for (const auto& c : profile.configs) {
        for (const auto& p : c.points) {
            os << std::fixed << std::setprecision(6) << p.carrier_thz << ',' << c.config_id << ',';
            if (p.status == ProbeStatus::Working) os << std::setprecision(4) << *p.gsnr_db;
            else if (p.status == ProbeStatus::Outage) os << "OUTAGE";
            else os << "UNUSABLE";
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace osaas::probing
