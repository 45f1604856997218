#include "osaas/core/units.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "osaas/core/errors.hpp"

namespace osaas {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double x) {
    if (!(x > 0.0)) {
        throw DomainError("dB of non-positive ratio " + std::to_string(x));
    }
    return 10.0 * std::log10(x);
}

double harmonic_db_sum(std::initializer_list<double> snrs_db) {
    double noise = 0.0;
    for (double s : snrs_db) {
        if (std::isinf(s) && s > 0) continue;
        noise += std::pow(10.0, -s / 10.0);
    }
    if (noise == 0.0) return std::numeric_limits<double>::infinity();
    return -10.0 * std::log10(noise);
}

double q_from_ber(double ber) {
    if (!(ber > 0.0 && ber < 0.5)) {
        throw DomainError("BER outside (0, 0.5): " + std::to_string(ber));
    }
    double q = std::sqrt(2.0) * boost::math::erfc_inv(2.0 * ber);
    return 20.0 * std::log10(q);
}

double ber_from_q(double q_db) {
    double q = std::pow(10.0, q_db / 20.0);
    return 0.5 * std::erfc(q / std::sqrt(2.0));
}

double osnr_to_snr(double osnr_db, double symbol_rate_gbd) {
    if (!(symbol_rate_gbd > 0.0)) throw DomainError("symbol rate must be positive");
    return osnr_db + 10.0 * std::log10(kOsnrRefBandwidthGhz / symbol_rate_gbd);
}

GridUnits to_grid(double ghz) { return static_cast<GridUnits>(std::llround(ghz / kGridGhz)); }

double from_grid(GridUnits units) { return static_cast<double>(units) * kGridGhz; }

bool divides_on_grid(double width_ghz, double step_ghz) {
    GridUnits w = to_grid(width_ghz);
    GridUnits s = to_grid(step_ghz);
    if (s <= 0 || std::abs(from_grid(s) - step_ghz) > 1e-9 || std::abs(from_grid(w) - width_ghz) > 1e-9) {
        return false;
    }
    return w % s == 0;
}

}  // namespace osaas
