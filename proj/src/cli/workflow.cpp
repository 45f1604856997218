#include "osaas/cli/workflow.hpp"

#include <algorithm>

#include "osaas/core/errors.hpp"

namespace osaas::cli {

using nlohmann::json;

std::unique_ptr<sim::SimulatedLine> make_line(const sim::Scenario& scenario, std::uint64_t seed) {
    auto line = std::make_unique<sim::SimulatedLine>(scenario.link, scenario.modem_model());
    line->reseed(seed);
    return line;
}

namespace {

// Line rate of the selected config and its id, or zero when nothing closes.
std::pair<double, std::optional<std::string>> best_rate(const sim::Scenario& scenario, const Catalog& catalog,
                                                        const CurveSet& curves, std::uint64_t seed, double theta_db) {
    auto line = make_line(scenario, seed);
    try {
        probing::WorkflowOptions opts;
        opts.theta_db = theta_db;
        auto w = probing::run_margin_workflow(*line, catalog, curves, scenario.policy,
                                              scenario.link.media_channel.center_frequency_thz, opts);
        if (!w.report.best_config) return {0.0, std::nullopt};
        return {find_config(catalog, *w.report.best_config).line_rate_gbps, w.report.best_config};
    } catch (const NoSignal&) {
        return {0.0, std::nullopt};
    }
}

}  // namespace

ThroughputEntry throughput_analysis(const sim::Scenario& scenario, const Catalog& catalog, const CurveSet& curves,
                                    std::uint64_t seed, double theta_db) {
    ThroughputEntry e;
    e.scenario = scenario.link.name;
    std::tie(e.achievable_gbps, e.achievable_config) = best_rate(scenario, catalog, curves, seed, theta_db);

    sim::Scenario open = scenario;
    open.link = scenario.link.without_filtering();
    std::tie(e.potential_gbps, e.potential_config) = best_rate(open, catalog, curves, seed, theta_db);
    if (e.potential_gbps < e.achievable_gbps) {
        e.potential_gbps = e.achievable_gbps;
        e.potential_config = e.achievable_config;
    }
    if (e.achievable_gbps > 0.0) e.gain_percent = 100.0 * (e.potential_gbps - e.achievable_gbps) / e.achievable_gbps;
    e.forty_channel_gain_gbps = kExtrapolationChannels * (e.potential_gbps - e.achievable_gbps);
    return e;
}

json to_json(const ThroughputEntry& e) {
    auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
    return {{"scenario", e.scenario},
            {"achievable_gbps", e.achievable_gbps},
            {"achievable_config", opt(e.achievable_config)},
            {"potential_gbps", e.potential_gbps},
            {"potential_config", opt(e.potential_config)},
            {"gain_percent", opt(e.gain_percent)},
            {"forty_channel_gain_gbps", e.forty_channel_gain_gbps}};
}

}  // namespace osaas::cli
