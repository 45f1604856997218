#pragma once

#include <vector>

#include "osaas/core/types.hpp"
#include "osaas/sim/link.hpp"

namespace osaas::sim {

// h·ν·B_ref at 193.4 THz expressed in dBm, sign flipped.
inline constexpr double kAseConstantDb = 58.0;

double span_osnr_db(const SpanSpec& span, double launch_dbm);
// OSNR (0.1 nm) of the whole cascade; +inf for no spans.
double cascade_osnr_db(const std::vector<SpanSpec>& spans, double launch_dbm);

// Accumulated ASE power inside the signal band (mW).
double ase_power(const std::vector<SpanSpec>& spans, double symbol_rate_gbd);

// Σ η_i·P³ with incoherent accumulation across spans (mW).
double nli_power(const std::vector<SpanSpec>& spans, double launch_mw);

// Launch power maximising P/(P_ase + η·P³), where P_ase = 2·η·P³.
double optimum_launch_power(double p_ase_mw, double eta_per_mw2);

// Product of super-Gaussian power transfers; 0.5 at c ± B/2 for each element.
double filter_transfer(const std::vector<FilterElement>& filters, double f_ghz);

// Fraction of carrier power passed by the cascade.
double filter_power_fraction(const std::vector<FilterElement>& filters, const PltConfig& config,
                             double carrier_offset_ghz);

// −κ·10·log10 of the passed power fraction.
double filtering_penalty(const std::vector<FilterElement>& filters, const PltConfig& config,
                         double carrier_offset_ghz, double isi_factor);

}  // namespace osaas::sim
