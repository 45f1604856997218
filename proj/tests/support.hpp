#pragma once

#include <cmath>
#include <filesystem>
#include <map>
#include <string>

#include "osaas/core/errors.hpp"
#include "osaas/core/line.hpp"
#include "osaas/core/units.hpp"
#include "osaas/modem/ber.hpp"

namespace osaas::test_support {

// Line with a fixed GSNR per config and no filtering, noise or power dependence.
class ConstantGsnrLine : public ProbeLine {
public:
    ConstantGsnrLine(MediaChannel mc, ModemModel modem, double gsnr_db)
        : mc_(mc), modem_(std::move(modem)), default_db_(gsnr_db) {}

    void set(const std::string& config_id, double gsnr_db) { per_config_[config_id] = gsnr_db; }
    void set_default(double gsnr_db) { default_db_ = gsnr_db; }
    int probes() const { return probes_; }

    const MediaChannel& media_channel() const override { return mc_; }
    BerReading probe(const PltConfig& config, const PowerPolicy&, double carrier_thz, double) override {
        if (!mc_.fits(config, carrier_thz)) throw CarrierRejected(config.id());
        ++probes_;
        auto it = per_config_.find(config.id());
        const double g = it == per_config_.end() ? default_db_ : it->second;
        BerReading r;
        r.pre_fec_ber = ber_from_snr(config.format, harmonic_db_sum({g, modem_.snr_modem_db(config)}));
        r.post_fec_ok = r.pre_fec_ber <= config.fec_threshold_ber;
        return r;
    }

private:
    MediaChannel mc_;
    ModemModel modem_;
    double default_db_;
    std::map<std::string, double> per_config_;
    int probes_ = 0;
};

inline MediaChannel wide_channel(double width_ghz = 100.0) {
    MediaChannel mc;
    mc.center_frequency_thz = 193.4;
    mc.width_ghz = width_ghz;
    mc.max_total_power_dbm = 10.0;
    mc.max_psd_dbm_per_ghz = 0.0;
    return mc;
}

// Inverse of erfc by bisection on std::erfc; independent of the library's erfc_inv.
inline double erfcinv_bisect(double y) {
    double lo = 0.0, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (std::erfc(mid) > y) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::filesystem::path scenario_dir() { return std::filesystem::path(OSAAS_SOURCE_DIR) / "scenarios"; }

}  // namespace osaas::test_support
