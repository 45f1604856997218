#include "osaas/sim/simulated_line.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "osaas/core/errors.hpp"
#include "osaas/core/units.hpp"
#include "osaas/sim/physics.hpp"

namespace osaas::sim {

namespace {

double ripple_at(const std::vector<RipplePoint>& pts, double f) {
    if (pts.empty()) return 0.0;
    if (f <= pts.front().offset_ghz) return pts.front().db;
    if (f >= pts.back().offset_ghz) return pts.back().db;
    auto hi = std::upper_bound(pts.begin(), pts.end(), f,
                               [](double v, const RipplePoint& p) { return v < p.offset_ghz; });
    auto lo = hi - 1;
    const double t = (f - lo->offset_ghz) / (hi->offset_ghz - lo->offset_ghz);
    return lo->db + t * (hi->db - lo->db);
}

// Offset profile sampled on the 0.25 GHz grid across the media channel.
struct OffsetProfile {
    double start_ghz;
    std::vector<double> values;

    double at(double f) const {
        const double x = std::clamp((f - start_ghz) / kGridGhz, 0.0, static_cast<double>(values.size() - 1));
        const size_t i = std::min(static_cast<size_t>(x), values.size() - 2);
        const double t = x - i;
        return values[i] * (1.0 - t) + values[i + 1] * t;
    }
};

void equalize(std::vector<double>& v, double start_ghz, const EqualizerNode& node, double width_ghz) {
    auto remove_mean = [&](size_t a, size_t b) {
        if (b <= a) return;
        double m = 0.0;
        for (size_t i = a; i < b; ++i) m += v[i];
        m /= static_cast<double>(b - a);
        for (size_t i = a; i < b; ++i) v[i] -= m;
    };
    if (node.granularity == EqGranularity::PerMediaChannel) {
        remove_mean(0, v.size());
        return;
    }
    const double w = node.nmc_width_ghz;
    for (double lo = 0.0; lo < width_ghz - 1e-9; lo += w) {
        const double hi = std::min(lo + w, width_ghz);
        auto idx = [&](double off) { return static_cast<size_t>(std::llround(off / kGridGhz)); };
        // The last sample belongs to the upper window only at the channel edge.
        const size_t b = hi >= width_ghz - 1e-9 ? v.size() : idx(hi);
        remove_mean(idx(lo), b);
    }
    (void)start_ghz;
}

OffsetProfile build_profile(const LinkSpec& link) {
    const double w = link.media_channel.width_ghz;
    OffsetProfile prof;
    prof.start_ghz = -w / 2.0;
    const size_t n = static_cast<size_t>(std::llround(w / kGridGhz)) + 1;
    std::vector<double> base(n);
    for (size_t i = 0; i < n; ++i) {
        const double f = prof.start_ghz + i * kGridGhz;
        base[i] = -link.tilt_db_per_mc * f / w + ripple_at(link.ripple, f);
    }
    const int spans = static_cast<int>(link.spans.size());
    if (spans == 0) {
        prof.values = base;
        return prof;
    }
    auto eqs = link.equalizers;
    std::stable_sort(eqs.begin(), eqs.end(), [](const auto& a, const auto& b) { return a.position < b.position; });
    // Tilt and ripple build up evenly along the spans; each node resets its windows.
    std::vector<double> acc(n, 0.0);
    int done = 0;
    auto grow = [&](int upto) {
        const double frac = static_cast<double>(upto - done) / spans;
        for (size_t i = 0; i < n; ++i) acc[i] += frac * base[i];
        done = upto;
    };
    for (const auto& e : eqs) {
        grow(e.position);
        equalize(acc, prof.start_ghz, e.node, w);
    }
    grow(spans);
    prof.values = std::move(acc);
    return prof;
}

}  // namespace

double spectral_offset(const LinkSpec& link, double offset_ghz) {
    if (link.tilt_db_per_mc == 0.0 && link.ripple.empty()) return 0.0;
    return build_profile(link).at(offset_ghz);
}

double diurnal_offset(const LinkSpec& link, double sim_time_h) {
    return link.diurnal_amplitude_db / 2.0 * std::sin(2.0 * std::numbers::pi * sim_time_h / link.diurnal_period_h);
}

SnrBreakdown line_snr(const LinkSpec& link, const PltConfig& config, const PowerPolicy& policy, double carrier_thz,
                      double sim_time_h) {
    const auto& mc = link.media_channel;
    if (!mc.fits(config, carrier_thz)) {
        throw CarrierRejected(config.id() + ": occupied band at " + std::to_string(carrier_thz) +
                              " THz leaves the media channel");
    }
    SnrBreakdown b{};
    b.launch_dbm = carrier_power(policy, config, mc);
    const double p_mw = db_to_linear(b.launch_dbm);
    const double inf = std::numeric_limits<double>::infinity();

    const double ase = ase_power(link.spans, config.symbol_rate_gbd);
    b.snr_ase_db = ase > 0.0 ? linear_to_db(p_mw / ase) : inf;

    // NLI coefficients are referenced to rs_ref; at equal PSD the NLI-to-signal ratio is rate independent.
    const double scale = link.rs_ref_gbd / config.symbol_rate_gbd;
    const double nli = nli_power(link.spans, p_mw) * scale * scale;
    b.snr_nli_db = nli > 0.0 ? linear_to_db(p_mw / nli) : inf;

    const double offset_ghz = (carrier_thz - mc.center_frequency_thz) * 1000.0;
    b.filtering_penalty_db = filtering_penalty(link.filter_cascade(), config, offset_ghz, link.isi_factor);
    b.spectral_offset_db = spectral_offset(link, offset_ghz);
    b.diurnal_offset_db = diurnal_offset(link, sim_time_h);
    b.line_gsnr_db = harmonic_db_sum({b.snr_ase_db, b.snr_nli_db}) - b.filtering_penalty_db + b.spectral_offset_db +
                     b.diurnal_offset_db;
    return b;
}

BerReading probe_response(const LinkSpec& link, const ModemModel& modem, const PltConfig& config,
                          const PowerPolicy& policy, double carrier_thz, double sim_time_h) {
    const auto b = line_snr(link, config, policy, carrier_thz, sim_time_h);
    BerReading r;
    const double total = harmonic_db_sum({b.line_gsnr_db, modem.snr_modem_db(config)});
    r.pre_fec_ber = std::min(ber_from_snr(config.format, total), 0.5);
    r.post_fec_ok = r.pre_fec_ber <= config.fec_threshold_ber;
    const double passed = filter_power_fraction(link.filter_cascade(), config,
                                                (carrier_thz - link.media_channel.center_frequency_thz) * 1000.0);
    r.rx_power_dbm = b.launch_dbm + (passed > 0.0 ? linear_to_db(passed) : -200.0);
    return r;
}

double ground_truth_gsnr(const LinkSpec& link, const PltConfig& config, double carrier_thz, const PowerPolicy& policy,
                         double sim_time_h, const ModemModel& probe_modem, const ModemModel& char_modem) {
    const auto b = line_snr(link, config, policy, carrier_thz, sim_time_h);
    const double noise = db_to_linear(-b.line_gsnr_db) + db_to_linear(-probe_modem.snr_modem_db(config)) -
                         db_to_linear(-char_modem.snr_modem_db(config));
    if (!(noise > 0.0)) return std::numeric_limits<double>::infinity();
    return -linear_to_db(noise);
}

SimulatedLine::SimulatedLine(LinkSpec link, ModemModel modem)
    : link_(std::move(link)), modem_(std::move(modem)), sigma_db_(link_.measurement_noise_db), rng_(link_.seed) {
    link_.validate();
}

void SimulatedLine::reseed(std::uint64_t seed) {
    std::lock_guard lock(mutex_);
    rng_.seed(seed);
}

BerReading SimulatedLine::probe(const PltConfig& config, const PowerPolicy& policy, double carrier_thz,
                                double sim_time_h) {
    std::lock_guard lock(mutex_);
    BerReading r = probe_response(link_, modem_, config, policy, carrier_thz, sim_time_h);
    if (sigma_db_ > 0.0 && r.pre_fec_ber > 0.0 && r.pre_fec_ber < 0.5) {
        std::normal_distribution<double> noise(0.0, sigma_db_);
        r.pre_fec_ber = ber_from_q(q_from_ber(r.pre_fec_ber) + noise(rng_));
        r.post_fec_ok = r.pre_fec_ber <= config.fec_threshold_ber;
    }
    return r;
}

}  // namespace osaas::sim
