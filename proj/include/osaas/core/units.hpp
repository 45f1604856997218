#pragma once

#include <cstdint>
#include <initializer_list>

namespace osaas {

// Reference noise bandwidth of OSNR values (0.1 nm at 1550 nm).
inline constexpr double kOsnrRefBandwidthGhz = 12.5;

double db_to_linear(double db);
// Throws DomainError for x <= 0 or NaN.
double linear_to_db(double x);

// -10·log10(Σ 10^(-x_i/10)): combination of independent noise contributions.
// +inf terms contribute nothing; an empty list gives +inf.
double harmonic_db_sum(std::initializer_list<double> snrs_db);

// BER <-> Q factor, q_linear = sqrt(2)·erfcinv(2·ber), reported in 20·log10.
double q_from_ber(double ber);
double ber_from_q(double q_db);

double osnr_to_snr(double osnr_db, double symbol_rate_gbd);

// Frequencies on a 0.25 GHz integer grid.
using GridUnits = std::int64_t;
inline constexpr double kGridGhz = 0.25;
GridUnits to_grid(double ghz);
double from_grid(GridUnits units);
// True if `step_ghz` divides `width_ghz` exactly on the grid.
bool divides_on_grid(double width_ghz, double step_ghz);

}  // namespace osaas
