#include "osaas/sim/link.hpp"

#include <cmath>

#include "osaas/core/errors.hpp"

namespace osaas::sim {

double SpanSpec::effective_nli_coeff() const {
    return dispersion_comp == DispersionComp::None ? nli_coeff_per_mw2 : nli_coeff_per_mw2 * kDcCoherenceFactor;
}

std::vector<FilterElement> LinkSpec::filter_cascade() const {
    if (!filtering_enabled) return {};
    std::vector<FilterElement> out = filters;
    for (const auto& s : spans) {
        if (s.dispersion_comp == DispersionComp::Dcg) out.push_back(dcg_filter);
    }
    return out;
}

LinkSpec LinkSpec::without_filtering() const {
    LinkSpec copy = *this;
    copy.filters.clear();
    copy.filtering_enabled = false;
    return copy;
}

void LinkSpec::validate() const {
    auto fail = [&](const std::string& why) { throw ScenarioError(name + ": " + why); };
    try {
        media_channel.validate();
    } catch (const ConfigError& e) {
        fail(e.what());
    }
    for (size_t i = 0; i < spans.size(); ++i) {
        const auto& s = spans[i];
        const std::string at = "span " + std::to_string(i + 1) + ": ";
        if (!(s.loss_db >= 0.0)) fail(at + "loss must be >= 0");
        if (std::abs(s.amp_gain_db - s.loss_db) > 1e-9) fail(at + "amplifier gain must equal span loss");
        if (!(s.nli_coeff_per_mw2 >= 0.0)) fail(at + "NLI coefficient must be >= 0");
        if (!(s.length_km >= 0.0)) fail(at + "length must be >= 0");
    }
    auto check_filter = [&](const FilterElement& f, const std::string& what) {
        if (!(f.bandwidth_3db_ghz > 0.0)) fail(what + ": bandwidth must be positive");
        if (f.order < 1) fail(what + ": order must be >= 1");
    };
    for (size_t i = 0; i < filters.size(); ++i) check_filter(filters[i], "filter " + std::to_string(i + 1));
    check_filter(dcg_filter, "DCG filter");
    for (const auto& e : equalizers) {
        if (e.position < 1 || e.position > static_cast<int>(spans.size())) {
            fail("equalizer position " + std::to_string(e.position) + " outside 1.." + std::to_string(spans.size()));
        }
        if (e.node.granularity == EqGranularity::PerNmc && !(e.node.nmc_width_ghz > 0.0)) {
            fail("NMC width must be positive");
        }
    }
    for (size_t i = 1; i < ripple.size(); ++i) {
        if (!(ripple[i].offset_ghz > ripple[i - 1].offset_ghz)) fail("ripple control points must be ascending");
    }
    if (!(diurnal_amplitude_db >= 0.0)) fail("diurnal amplitude must be >= 0");
    if (!(diurnal_period_h > 0.0)) fail("diurnal period must be positive");
    if (!(isi_factor >= 0.0)) fail("ISI factor must be >= 0");
    if (!(rs_ref_gbd > 0.0)) fail("reference symbol rate must be positive");
    if (!(measurement_noise_db >= 0.0)) fail("measurement noise must be >= 0");
}

}  // namespace osaas::sim
