#pragma once

#include <map>
#include <string>

#include "osaas/core/catalog.hpp"
#include "osaas/core/types.hpp"

namespace osaas {

// Gaussian tail probability Q(x).
double q_function(double x);

// Analytic AWGN pre-FEC BER. DP-P-16QAM is treated as rectangular 8QAM.
double ber_from_snr(ModulationFormat format, double snr_db);

// SNR at which ber_from_snr equals `ber` (bisection, 1e-10 dB).
double snr_at_ber(ModulationFormat format, double ber);

inline constexpr double kImplementationAllowanceDb = 1.0;

// FEC-threshold SNR plus the implementation allowance.
double default_required_gsnr(ModulationFormat format, double fec_threshold_ber = kDefaultFecThreshold);

// The eleven-configuration default transceiver catalog.
Catalog default_catalog();

// Transceiver implementation noise (SNR_modem) per configuration.
class ModemModel {
public:
    // SNR_modem chosen so that the implementation allowance of each config is
    // consumed exactly by modem noise at the FEC threshold.
    static ModemModel matched();
    static ModemModel uniform(double snr_modem_db);

    ModemModel& set(const std::string& config_id, double snr_modem_db);
    double snr_modem_db(const PltConfig& config) const;

private:
    bool matched_ = true;
    double uniform_db_ = 0.0;
    std::map<std::string, double> overrides_;
};

}  // namespace osaas
