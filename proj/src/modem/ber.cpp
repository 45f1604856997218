#include "osaas/modem/ber.hpp"

#include <cmath>
#include <limits>

#include "osaas/core/errors.hpp"
#include "osaas/core/units.hpp"

namespace osaas {

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

namespace {

// Squared half minimum distance over mean symbol energy of rectangular 8QAM is 1/6,
// so per-bit errors follow Q(sqrt(snr/3 * K8)) with K8 = 1.
constexpr double kK8 = 1.0;

}  // namespace

double ber_from_snr(ModulationFormat format, double snr_db) {
    if (std::isinf(snr_db) && snr_db > 0) return 0.0;
    const double snr = db_to_linear(snr_db);
    switch (format) {
        case ModulationFormat::DpQpsk: return q_function(std::sqrt(snr));
        case ModulationFormat::Dp16Qam: return 3.0 / 8.0 * std::erfc(std::sqrt(snr / 10.0));
        case ModulationFormat::DpP16Qam: return 2.0 / 3.0 * q_function(std::sqrt(snr / 3.0 * kK8));
    }
    return 0.5;
}

double snr_at_ber(ModulationFormat format, double ber) {
    if (!(ber > 0.0 && ber < 0.3)) throw DomainError("target BER outside (0, 0.3)");
    double lo = -10.0, hi = 40.0;
    if (ber_from_snr(format, lo) < ber) throw DomainError("target BER not reachable");
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (ber_from_snr(format, mid) > ber) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double default_required_gsnr(ModulationFormat format, double fec_threshold_ber) {
    return snr_at_ber(format, fec_threshold_ber) + kImplementationAllowanceDb;
}

Catalog default_catalog() {
    struct Row {
        double rs;
        ModulationFormat f;
        double rate;
    };
    using enum ModulationFormat;
    const Row rows[] = {
        {31.5, DpQpsk, 100},   {34.5, Dp16Qam, 200},  {34.5, DpQpsk, 100},  {46.3, DpP16Qam, 200},
        {46.3, Dp16Qam, 300},  {52.0, DpP16Qam, 300}, {55.5, DpP16Qam, 200}, {58.0, Dp16Qam, 400},
        {69.4, DpQpsk, 200},   {69.4, DpP16Qam, 300}, {69.4, Dp16Qam, 400},
    };
    Catalog out;
    for (const auto& r : rows) {
        PltConfig c;
        c.format = r.f;
        c.symbol_rate_gbd = r.rs;
        c.line_rate_gbps = r.rate;
        c.required_gsnr_db = default_required_gsnr(r.f);
        out.push_back(c);
    }
    return out;
}

ModemModel ModemModel::matched() { return ModemModel{}; }

ModemModel ModemModel::uniform(double snr_modem_db) {
    if (!(snr_modem_db > 0.0)) throw DomainError("snr_modem must be > 0 dB");
    ModemModel m;
    m.matched_ = false;
    m.uniform_db_ = snr_modem_db;
    return m;
}

ModemModel& ModemModel::set(const std::string& config_id, double snr_modem_db) {
    if (!(snr_modem_db > 0.0)) throw DomainError("snr_modem must be > 0 dB");
    overrides_[config_id] = snr_modem_db;
    return *this;
}

double ModemModel::snr_modem_db(const PltConfig& config) const {
    if (auto it = overrides_.find(config.id()); it != overrides_.end()) return it->second;
    if (!matched_) return uniform_db_;
    const double thr = snr_at_ber(config.format, config.fec_threshold_ber);
    const double excess = db_to_linear(-thr) - db_to_linear(-config.required_gsnr_db);
    if (excess <= 0.0) return std::numeric_limits<double>::infinity();
    return -linear_to_db(excess);
}

}  // namespace osaas
