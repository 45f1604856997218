#include "osaas/cli/commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "osaas/cli/monitor.hpp"
#include "osaas/cli/workflow.hpp"
#include "osaas/core/errors.hpp"
#include "osaas/core/units.hpp"
#include "osaas/probing/regime.hpp"
#include "osaas/probing/sweep.hpp"

namespace osaas::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
    std::vector<std::string> scenarios;
    std::string catalog;
    std::optional<std::uint64_t> seed;
    std::optional<double> step_ghz;
    double theta_db = probing::kDefaultThetaDb;
    std::string out = ".";
};

std::uint64_t resolve_seed(const Options& o, const sim::Scenario& s) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("OSAAS_PROBE_SEED"); env && *env) {
        try {
            size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
            return v;
        } catch (const std::exception&) {
            throw ConfigError(std::string("OSAAS_PROBE_SEED is not an unsigned integer: ") + env);
        }
    }
    return s.link.seed;
}

void write_file(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path.string());
    f << text;
}

json envelope(const std::string& command, const sim::Scenario& s, std::uint64_t seed) {
    return {{"schema_version", kReportSchemaVersion}, {"command", command}, {"scenario", s.link.name}, {"seed", seed}};
}

const sim::Scenario& single_scenario(const std::vector<sim::Scenario>& s) {
    if (s.size() != 1) throw ConfigError("exactly one --scenario is required");
    return s.front();
}

fs::path curve_dir(const Options& o) { return fs::path(o.out) / "curves"; }

int cmd_characterize(const Options& o, const Catalog& catalog, const std::vector<sim::Scenario>& scenarios,
                     std::ostream& out) {
    const ModemModel model = scenarios.empty() ? ModemModel::matched() : scenarios.front().modem_model();
    const auto curves = characterize_catalog(model, catalog);
    save_curves(curves, curve_dir(o));
    for (const auto& [id, c] : curves) {
        out << id << ": degree " << c.degree() << ", valid " << c.gsnr_min() << ".." << c.gsnr_max() << " dB\n";
    }
    out << curves.size() << " curve file(s) in " << curve_dir(o).string() << '\n';
    return kExitOk;
}

int cmd_probe(const Options& o, const Catalog& catalog, const sim::Scenario& s, std::ostream& out) {
    const auto curves = load_curves(catalog, curve_dir(o));
    const auto seed = resolve_seed(o, s);
    auto line = make_line(s, seed);
    probing::WorkflowOptions opts;
    opts.theta_db = o.theta_db;
    const auto w = probing::run_margin_workflow(*line, catalog, curves, s.policy,
                                                s.link.media_channel.center_frequency_thz, opts);
    json j = envelope("probe", s, seed);
    j["theta_db"] = o.theta_db;
    j["report"] = probing::to_json(w.report);
    j["penalties"] = probing::to_json(w.penalties);
    j["campaign"] = probing::to_json(w.campaign);
    write_file(fs::path(o.out) / "margin_report.json", j.dump(2) + "\n");

    out << std::fixed << std::setprecision(2);
    out << "link GSNR estimate " << w.report.gsnr_est_link_db << " dB, symbol rate cap "
        << w.report.symbol_rate_cap_gbd << " GBd\n";
    out << "best configuration: " << w.report.best_config.value_or("none") << '\n';
    out << "verification: " << probing::verification_name(w.report.verification.status) << ", bound "
        << w.report.verification.accuracy_bound_db << " dB\n";
    return kExitOk;
}

int cmd_sweep(const Options& o, const Catalog& catalog, const sim::Scenario& s, std::ostream& out) {
    const double step = o.step_ghz.value_or(s.sweep_step_ghz);
    if (!(step > 0.0) || !divides_on_grid(s.link.media_channel.width_ghz, step)) {
        throw ConfigError("sweep step " + std::to_string(step) + " GHz does not divide the media channel width");
    }
    std::vector<PltConfig> configs;
    if (s.sweep_configs.empty()) configs = catalog;
    for (const auto& id : s.sweep_configs) configs.push_back(find_config(catalog, id));
    const auto curves = load_curves(catalog, curve_dir(o));
    const auto seed = resolve_seed(o, s);
    auto line = make_line(s, seed);
    const auto profile = probing::run_frequency_sweep(*line, configs, curves, step, s.policy);

    json j = envelope("sweep", s, seed);
    j["step_ghz"] = step;
    out << std::fixed << std::setprecision(2);
    try {
        const auto m = probing::detect_misalignment(profile);
        j["misalignment"] = {{"offset_ghz", m.offset_ghz}, {"indeterminate", m.indeterminate}, {"config_id", m.config_id}};
        out << "centre misalignment " << std::showpos << m.offset_ghz << std::noshowpos << " GHz"
            << (m.indeterminate ? " (indeterminate)" : "") << " from " << m.config_id << '\n';
    } catch (const InsufficientData& e) {
        j["misalignment"] = {{"error", e.what()}};
        out << "centre misalignment: " << e.what() << '\n';
    }
    json tilts = json::array();
    for (const auto& cp : profile.configs) {
        try {
            const auto tr = probing::profile_tilt_ripple(profile, cp.config_id);
            tilts.push_back({{"config_id", cp.config_id}, {"tilt_db", tr.tilt_db}, {"ripple_db", tr.ripple_db}});
            out << cp.config_id << ": tilt " << tr.tilt_db << " dB, ripple " << tr.ripple_db << " dB\n";
        } catch (const InsufficientData& e) {
            tilts.push_back({{"config_id", cp.config_id}, {"error", e.what()}});
            out << cp.config_id << ": " << e.what() << '\n';
        }
    }
    j["tilt_ripple"] = tilts;
    j["profile"] = probing::to_json(profile);
    write_file(fs::path(o.out) / "profile.csv", probing::to_csv(profile));
    write_file(fs::path(o.out) / "sweep_summary.json", j.dump(2) + "\n");
    return kExitOk;
}

int cmd_regime(const Options& o, const Catalog& catalog, const sim::Scenario& s, std::ostream& out) {
    const auto* psd = std::get_if<ConstantPsd>(&s.policy);
    if (!psd) throw ConfigError("regime detection needs a constant-PSD reference policy");
    if (catalog.empty()) throw ConfigError("empty catalog");
    double rs_ref = 0.0;
    for (const auto& c : catalog) rs_ref = std::max(rs_ref, c.symbol_rate_gbd);
    const auto curves = load_curves(catalog, curve_dir(o));
    const auto seed = resolve_seed(o, s);
    auto line = make_line(s, seed);
    const auto rep = probing::detect_operation_regime(*line, catalog, curves, psd->psd_dbm_per_ghz, rs_ref,
                                                      s.link.media_channel.center_frequency_thz);
    json j = envelope("regime", s, seed);
    j["report"] = probing::to_json(rep);
    write_file(fs::path(o.out) / "regime_report.json", j.dump(2) + "\n");
    out << std::fixed << std::setprecision(2);
    for (const auto& e : rep.entries) {
        out << e.config_id << ": " << (e.regime ? probing::regime_name(*e.regime) : std::string("excluded"));
        if (e.delta_db) out << " (delta " << std::showpos << *e.delta_db << std::noshowpos << " dB)";
        if (!e.note.empty()) out << " [" << e.note << "]";
        out << '\n';
    }
    return kExitOk;
}

int cmd_throughput(const Options& o, const Catalog& catalog, const std::vector<sim::Scenario>& scenarios,
                   std::ostream& out) {
    if (scenarios.empty()) throw ConfigError("at least one --scenario is required");
    const auto curves = load_curves(catalog, curve_dir(o));
    json entries = json::array();
    std::vector<std::uint64_t> seeds;
    out << "note: potential throughput is a simulator-assisted what-if with the line filters removed\n";
    out << std::fixed << std::setprecision(1);
    for (const auto& s : scenarios) {
        const auto seed = resolve_seed(o, s);
        seeds.push_back(seed);
        const auto e = throughput_analysis(s, catalog, curves, seed, o.theta_db);
        json je = to_json(e);
        je["seed"] = seed;
        entries.push_back(je);
        out << e.scenario << ": achievable " << e.achievable_gbps << " Gb/s, potential " << e.potential_gbps
            << " Gb/s";
        if (e.gain_percent) out << ", gain " << *e.gain_percent << " %";
        out << ", 40-channel gain " << e.forty_channel_gain_gbps << " Gb/s\n";
    }
    json j{{"schema_version", kReportSchemaVersion},
           {"command", "throughput"},
           {"simulator_assisted", true},
           {"caveat", "potential throughput assumes the line filtering could be removed; a black-box deployment cannot do this"},
           {"entries", entries}};
    write_file(fs::path(o.out) / "throughput_report.json", j.dump(2) + "\n");
    return kExitOk;
}

int cmd_monitor(const Options& o, const Catalog& catalog, const sim::Scenario& s, std::ostream& out) {
    if (!s.monitor) throw ConfigError("scenario " + s.link.name + " has no monitor section");
    const auto& config = find_config(catalog, s.monitor->config_id);
    const auto curves = load_curves(catalog, curve_dir(o));
    const auto seed = resolve_seed(o, s);
    auto line = make_line(s, seed);
    const auto series = run_monitor(*line, catalog, curves, config, s.policy,
                                    s.link.media_channel.center_frequency_thz, s.monitor->duration_h,
                                    s.monitor->interval_h);
    json j = envelope("monitor", s, seed);
    j["duration_h"] = s.monitor->duration_h;
    j["interval_h"] = s.monitor->interval_h;
    j["summary"] = to_json(series);
    write_file(fs::path(o.out) / "monitor.csv", to_csv(series));
    write_file(fs::path(o.out) / "monitor_summary.json", j.dump(2) + "\n");
    out << std::fixed << std::setprecision(2);
    out << series.config_id << ": swing " << series.swing_db << " dB, best window at " << series.best_time_of_day_h
        << " h (" << series.best_gsnr_db << " dB)\n";
    if (series.upgrade) {
        out << "upgrade " << series.upgrade->from_slot_ghz << " -> " << series.upgrade->to_slot_ghz << " GHz ("
            << series.upgrade->to_config << "), C-band gain " << series.upgrade->capacity_gain_gbps << " Gb/s\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Channel probing of optical spectrum services", "osaas-probe"};
    app.require_subcommand(1);
    Options o;
    const char* names[] = {"characterize", "probe", "sweep", "regime", "throughput", "monitor"};
    const char* help[] = {"build characterization curves for the catalog",
                          "extended probing, symbol rate cap, margins and verification",
                          "frequency sweep with misalignment and tilt analysis",
                          "operation regime detection",
                          "achievable versus potential throughput",
                          "time-series probing of one configuration"};
    for (int i = 0; i < 6; ++i) {
        auto* sub = app.add_subcommand(names[i], help[i]);
        sub->add_option("--scenario", o.scenarios, "scenario file (repeatable for throughput)");
        sub->add_option("--catalog", o.catalog, "transceiver catalog file")->required();
        sub->add_option("--seed", o.seed, "measurement noise seed");
        sub->add_option("--step-ghz", o.step_ghz, "sweep step in GHz");
        sub->add_option("--theta-db", o.theta_db, "symbol rate cap penalty threshold in dB");
        sub->add_option("--out", o.out, "output directory");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        std::vector<sim::Scenario> scenarios;
        for (const auto& p : o.scenarios) scenarios.push_back(sim::load_scenario(p));
        const Catalog catalog = load_catalog(o.catalog);
        if (cmd == "characterize") return cmd_characterize(o, catalog, scenarios, out);
        if (cmd == "throughput") return cmd_throughput(o, catalog, scenarios, out);
        const auto& s = single_scenario(scenarios);
        if (cmd == "probe") return cmd_probe(o, catalog, s, out);
        if (cmd == "sweep") return cmd_sweep(o, catalog, s, out);
        if (cmd == "regime") return cmd_regime(o, catalog, s, out);
        return cmd_monitor(o, catalog, s, out);
    } catch (const ScenarioError& e) {
        err << "invalid scenario: " << e.what() << '\n';
        return kExitInvalidScenario;
    } catch (const NoSignal& e) {
        err << "no signal: " << e.what() << '\n';
        return kExitNoSignal;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const FitRejected& e) {
        err << "characterization failed: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const InsufficientData& e) {
        err << "characterization failed: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace osaas::cli
