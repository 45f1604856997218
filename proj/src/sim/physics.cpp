#include "osaas/sim/physics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "osaas/core/errors.hpp"
#include "osaas/core/units.hpp"

namespace osaas::sim {

double span_osnr_db(const SpanSpec& span, double launch_dbm) {
    return launch_dbm + kAseConstantDb - span.loss_db - span.amp_noise_figure_db;
}

double cascade_osnr_db(const std::vector<SpanSpec>& spans, double launch_dbm) {
    double inv = 0.0;
    for (const auto& s : spans) inv += db_to_linear(-span_osnr_db(s, launch_dbm));
    if (inv == 0.0) return std::numeric_limits<double>::infinity();
    return -linear_to_db(inv);
}

double ase_power(const std::vector<SpanSpec>& spans, double symbol_rate_gbd) {
    double p = 0.0;
    for (const auto& s : spans) p += db_to_linear(-kAseConstantDb + s.loss_db + s.amp_noise_figure_db);
    return p * symbol_rate_gbd / kOsnrRefBandwidthGhz;
}

double nli_power(const std::vector<SpanSpec>& spans, double launch_mw) {
    if (launch_mw < 0.0) throw DomainError("launch power must be >= 0 mW");
    double p = 0.0;
    for (const auto& s : spans) p += s.effective_nli_coeff() * launch_mw * launch_mw * launch_mw;
    return p;
}

double optimum_launch_power(double p_ase_mw, double eta_per_mw2) {
    if (!(eta_per_mw2 > 0.0)) return std::numeric_limits<double>::infinity();
    return std::cbrt(p_ase_mw / (2.0 * eta_per_mw2));
}

double filter_transfer(const std::vector<FilterElement>& filters, double f_ghz) {
    double exponent = 0.0;
    for (const auto& flt : filters) {
        const double x = 2.0 * (f_ghz - flt.center_offset_ghz) / flt.bandwidth_3db_ghz;
        exponent += std::pow(x * x, flt.order);
    }
    return std::exp(-std::numbers::ln2 * exponent);
}

double filter_power_fraction(const std::vector<FilterElement>& filters, const PltConfig& config,
                             double carrier_offset_ghz) {
    if (filters.empty()) return 1.0;
    // Composite Simpson over the occupied band; the RRC spectrum has unit area.
    const int n = 2000;
    const double hi = config.occupied_bandwidth_ghz() / 2.0;
    const double h = 2.0 * hi / n;
    double num = 0.0, den = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double f = -hi + i * h;
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        const double p = rrc_psd(config, f);
        num += w * p * filter_transfer(filters, f + carrier_offset_ghz);
        den += w * p;
    }
    return num / den;
}

double filtering_penalty(const std::vector<FilterElement>& filters, const PltConfig& config,
                         double carrier_offset_ghz, double isi_factor) {
    const double frac = filter_power_fraction(filters, config, carrier_offset_ghz);
    if (!(frac > 0.0)) return std::numeric_limits<double>::infinity();
    return -isi_factor * linear_to_db(frac);
}

}  // namespace osaas::sim
