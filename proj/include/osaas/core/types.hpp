#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace osaas {

enum class ModulationFormat { DpQpsk, DpP16Qam, Dp16Qam };

int bits_per_symbol(ModulationFormat f);
std::string_view format_name(ModulationFormat f);
// Throws ConfigError on unknown names.
ModulationFormat parse_format(std::string_view name);

inline constexpr double kDefaultRollOff = 0.19;
inline constexpr double kDefaultFecThreshold = 2.0e-2;

struct PltConfig {
    ModulationFormat format = ModulationFormat::DpQpsk;
    double symbol_rate_gbd = 0.0;
    double roll_off = kDefaultRollOff;
    double line_rate_gbps = 0.0;
    double required_gsnr_db = 0.0;
    double fec_threshold_ber = kDefaultFecThreshold;

    double occupied_bandwidth_ghz() const { return symbol_rate_gbd * (1.0 + roll_off); }
    // e.g. "DP-QPSK-69.4-200G"
    std::string id() const;
    // Throws ConfigError when an invariant is broken.
    void validate() const;
};

struct MediaChannel {
    double center_frequency_thz = 193.4;
    double width_ghz = 100.0;
    double max_total_power_dbm = 0.0;
    double max_psd_dbm_per_ghz = 0.0;

    double lower_edge_thz() const { return center_frequency_thz - width_ghz / 2000.0; }
    double upper_edge_thz() const { return center_frequency_thz + width_ghz / 2000.0; }
    // Occupied band of `config` centred at `carrier_thz` lies inside the channel.
    bool fits(const PltConfig& config, double carrier_thz) const;
    void validate() const;
};

struct ConstantPsd {
    double psd_dbm_per_ghz;
};
struct ConstantTotalPower {
    double power_dbm;
};
using PowerPolicy = std::variant<ConstantPsd, ConstantTotalPower>;

std::string describe(const PowerPolicy& policy);

// Launch power of one carrier. Throws LimitViolation if the power or the
// resulting PSD exceeds the media channel budget.
double carrier_power(const PowerPolicy& policy, const PltConfig& config, const MediaChannel& mc);
// Same without limit checks.
double carrier_power(const PowerPolicy& policy, const PltConfig& config);

// Unit-area raised-cosine power spectrum of the RRC-shaped carrier (GHz^-1).
double rrc_psd(const PltConfig& config, double f_offset_ghz);

}  // namespace osaas
