#include "osaas/core/types.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "osaas/core/errors.hpp"

namespace osaas {

int bits_per_symbol(ModulationFormat f) {
    switch (f) {
        case ModulationFormat::DpQpsk: return 4;
        case ModulationFormat::DpP16Qam: return 6;
        case ModulationFormat::Dp16Qam: return 8;
    }
    return 0;
}

std::string_view format_name(ModulationFormat f) {
    switch (f) {
        case ModulationFormat::DpQpsk: return "DP-QPSK";
        case ModulationFormat::DpP16Qam: return "DP-P-16QAM";
        case ModulationFormat::Dp16Qam: return "DP-16QAM";
    }
    return "?";
}

ModulationFormat parse_format(std::string_view name) {
    if (name == "DP-QPSK") return ModulationFormat::DpQpsk;
    if (name == "DP-P-16QAM") return ModulationFormat::DpP16Qam;
    if (name == "DP-16QAM") return ModulationFormat::Dp16Qam;
    throw ConfigError("unknown modulation format '" + std::string(name) + "'");
}

namespace {

std::string trim_number(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

std::string PltConfig::id() const {
    return std::string(format_name(format)) + "-" + trim_number(symbol_rate_gbd) + "-" +
           trim_number(line_rate_gbps) + "G";
}

void PltConfig::validate() const {
    auto fail = [&](const std::string& why) { throw ConfigError(id() + ": " + why); };
    if (!(symbol_rate_gbd > 0.0)) fail("symbol rate must be positive");
    if (!(roll_off >= 0.0 && roll_off <= 1.0)) fail("roll-off outside [0, 1]");
    if (!(line_rate_gbps > 0.0)) fail("line rate must be positive");
    if (line_rate_gbps > bits_per_symbol(format) * symbol_rate_gbd + 1e-9) {
        fail("line rate exceeds bits per symbol x symbol rate");
    }
    if (!std::isfinite(required_gsnr_db) || !(required_gsnr_db > 0.0)) fail("required GSNR must be finite and positive");
    if (!(fec_threshold_ber > 0.0 && fec_threshold_ber < 0.5)) fail("FEC threshold outside (0, 0.5)");
}

bool MediaChannel::fits(const PltConfig& config, double carrier_thz) const {
    double half = config.occupied_bandwidth_ghz() / 2.0;
    double off = (carrier_thz - center_frequency_thz) * 1000.0;
    const double eps = 1e-6;
    return off - half >= -width_ghz / 2.0 - eps && off + half <= width_ghz / 2.0 + eps;
}

void MediaChannel::validate() const {
    if (!(width_ghz > 0.0)) throw ConfigError("media channel width must be positive");
    if (!(center_frequency_thz >= 191.0 && center_frequency_thz <= 196.0)) {
        throw ConfigError("media channel centre outside the C band [191, 196] THz");
    }
}

std::string describe(const PowerPolicy& policy) {
    std::ostringstream os;
    if (auto* p = std::get_if<ConstantPsd>(&policy)) {
        os << "ConstantPsd(" << p->psd_dbm_per_ghz << " dBm/GHz)";
    } else {
        os << "ConstantTotalPower(" << std::get<ConstantTotalPower>(policy).power_dbm << " dBm)";
    }
    return os.str();
}

double carrier_power(const PowerPolicy& policy, const PltConfig& config) {
    if (auto* p = std::get_if<ConstantPsd>(&policy)) {
        return p->psd_dbm_per_ghz + 10.0 * std::log10(config.symbol_rate_gbd);
    }
    return std::get<ConstantTotalPower>(policy).power_dbm;
}

double carrier_power(const PowerPolicy& policy, const PltConfig& config, const MediaChannel& mc) {
    double p = carrier_power(policy, config);
    double psd = p - 10.0 * std::log10(config.symbol_rate_gbd);
    const double eps = 1e-9;
    if (p > mc.max_total_power_dbm + eps) {
        throw LimitViolation(config.id() + ": carrier power " + std::to_string(p) + " dBm above channel limit");
    }
    if (psd > mc.max_psd_dbm_per_ghz + eps) {
        throw LimitViolation(config.id() + ": PSD " + std::to_string(psd) + " dBm/GHz above channel limit");
    }
    return p;
}

double rrc_psd(const PltConfig& config, double f_offset_ghz) {
    const double rs = config.symbol_rate_gbd;
    const double r = config.roll_off;
    const double a = std::abs(f_offset_ghz);
    const double lo = (1.0 - r) * rs / 2.0;
    const double hi = (1.0 + r) * rs / 2.0;
    if (a <= lo) return 1.0 / rs;
    if (a > hi) return 0.0;
    return (1.0 + std::cos(std::numbers::pi / (r * rs) * (a - lo))) / (2.0 * rs);
}

}  // namespace osaas
