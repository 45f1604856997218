#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osaas/core/types.hpp"

namespace osaas::sim {

enum class DispersionComp { None, Dcf, Dcg };

// NLI coherence factor applied to dispersion-compensated spans.
inline constexpr double kDcCoherenceFactor = 1.5;

struct SpanSpec {
    double length_km = 0.0;
    double loss_db = 0.0;
    double amp_gain_db = 0.0;
    double amp_noise_figure_db = 5.0;
    double nli_coeff_per_mw2 = 0.0;
    DispersionComp dispersion_comp = DispersionComp::None;

    double effective_nli_coeff() const;
};

struct FilterElement {
    double center_offset_ghz = 0.0;
    double bandwidth_3db_ghz = 0.0;
    int order = 1;
};

enum class EqGranularity { PerMediaChannel, PerNmc };

struct EqualizerNode {
    EqGranularity granularity = EqGranularity::PerMediaChannel;
    double target_psd_dbm_per_ghz = 0.0;
    double nmc_width_ghz = 75.0;
};

struct PlacedEqualizer {
    // Number of spans upstream of the node.
    int position = 0;
    EqualizerNode node;
};

struct RipplePoint {
    double offset_ghz;
    double db;
};

struct LinkSpec {
    std::string name;
    std::string description;
    MediaChannel media_channel;
    std::vector<SpanSpec> spans;
    std::vector<FilterElement> filters;
    // Filter contributed by every DCG span.
    FilterElement dcg_filter{0.0, 60.0, 4};
    bool filtering_enabled = true;
    std::vector<PlacedEqualizer> equalizers;
    // GSNR at the lower MC edge minus GSNR at the upper edge.
    double tilt_db_per_mc = 0.0;
    std::vector<RipplePoint> ripple;
    double diurnal_amplitude_db = 0.0;
    double diurnal_period_h = 24.0;
    double isi_factor = 2.0;
    // Symbol rate at which the NLI coefficients hold; NLI scales with PSD.
    double rs_ref_gbd = 69.4;
    double measurement_noise_db = 0.05;
    std::uint64_t seed = 1;

    // Explicit filters followed by one element per DCG span.
    std::vector<FilterElement> filter_cascade() const;
    // Copy with every filtering element removed.
    LinkSpec without_filtering() const;
    // Throws ScenarioError.
    void validate() const;
};

}  // namespace osaas::sim
