#include "osaas/probing/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "osaas/core/errors.hpp"

namespace osaas::probing {

using nlohmann::json;

namespace {

constexpr double kRateEps = 1e-9;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::vector<PenaltyEntry> compute_penalties(const ProbeCampaign& campaign) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : campaign.results) {
        if (r.status == ProbeStatus::Working) best = std::max(best, *r.gsnr_est_db);
    }
    if (!std::isfinite(best)) throw NoSignal("no working probe configuration");
    std::vector<PenaltyEntry> out;
    for (const auto& r : campaign.results) {
        const bool w = r.status == ProbeStatus::Working;
        out.push_back({r.config_id, r.symbol_rate_gbd, w,
                       w ? best - *r.gsnr_est_db : std::numeric_limits<double>::infinity()});
    }
    return out;
}

double detect_symbol_rate_cap(const std::vector<PenaltyEntry>& penalties, double theta_db) {
    if (penalties.empty()) throw InsufficientData("no penalties to derive a symbol rate cap from");
    double cap = 0.0;
    const PenaltyEntry* least = nullptr;
    for (const auto& p : penalties) {
        if (!p.working) continue;
        if (p.penalty_db <= theta_db) cap = std::max(cap, p.symbol_rate_gbd);
        if (!least || p.penalty_db < least->penalty_db) least = &p;
    }
    if (cap == 0.0 && least) cap = least->symbol_rate_gbd;
    return cap;
}

double estimate_link_gsnr(const ProbeCampaign& campaign, double cap_gbd) {
    double sum = 0.0;
    int n = 0;
    for (const auto& r : campaign.results) {
        if (r.status == ProbeStatus::Working && r.symbol_rate_gbd <= cap_gbd + kRateEps) {
            sum += *r.gsnr_est_db;
            ++n;
        }
    }
    if (n == 0) throw NoSignal("no working configuration at or below the symbol rate cap");
    return sum / n;
}

std::string verification_name(VerificationStatus s) {
    switch (s) {
        case VerificationStatus::FalsePredictions: return "false_predictions";
        case VerificationStatus::NoFalsePredictions: return "no_false_predictions";
        case VerificationStatus::Unverified: return "unverified";
    }
    return "?";
}

MarginReport compute_margins(double gsnr_est_link_db, const Catalog& catalog, double cap_gbd) {
    MarginReport rep;
    rep.gsnr_est_link_db = gsnr_est_link_db;
    rep.symbol_rate_cap_gbd = cap_gbd;
    for (const auto& c : catalog) {
        if (c.symbol_rate_gbd > cap_gbd + kRateEps) continue;
        rep.margins.push_back({c.id(), c.symbol_rate_gbd, c.line_rate_gbps, gsnr_est_link_db - c.required_gsnr_db});
    }
    return rep;
}

std::optional<std::string> select_best_config(const MarginReport& report) {
    const MarginEntry* best = nullptr;
    for (const auto& m : report.margins) {
        if (!(m.margin_db > 0.0)) continue;
        if (!best || m.line_rate_gbps > best->line_rate_gbps ||
            (m.line_rate_gbps == best->line_rate_gbps &&
             (m.margin_db > best->margin_db ||
              (m.margin_db == best->margin_db && m.symbol_rate_gbd < best->symbol_rate_gbd)))) {
            best = &m;
        }
    }
    if (!best) return std::nullopt;
    return best->config_id;
}

Verification verify_margin_accuracy(ProbeLine& line, const MarginReport& report, const Catalog& catalog,
                                    const CurveSet& curves, const PowerPolicy& policy, double center_thz,
                                    double sim_time_h) {
    Verification v;
    bool any_checked = false;
    bool any_false = false;
    for (const auto& m : report.margins) {
        if (std::abs(m.margin_db) > kVerificationBandDb) continue;
        const auto& config = find_config(catalog, m.config_id);
        auto r = probe_config(line, curves, config, policy, center_thz, sim_time_h);
        if (r.status != ProbeStatus::Unusable) {
            any_checked = true;
            const bool predicted = m.margin_db > 0.0;
            const bool works = r.status == ProbeStatus::Working;
            if (predicted != works) {
                any_false = true;
                v.accuracy_bound_db = std::max(v.accuracy_bound_db, std::abs(m.margin_db));
            }
        }
        v.evidence.push_back(std::move(r));
    }
    v.status = !any_checked ? VerificationStatus::Unverified
               : any_false  ? VerificationStatus::FalsePredictions
                            : VerificationStatus::NoFalsePredictions;
    return v;
}

WorkflowResult run_margin_workflow(ProbeLine& line, const Catalog& catalog, const CurveSet& curves,
                                   const PowerPolicy& policy, double center_thz, const WorkflowOptions& opts) {
    WorkflowResult w;
    w.campaign = run_extended_probe(line, catalog, curves, policy, center_thz, opts.sim_time_h);
    w.penalties = compute_penalties(w.campaign);
    const double cap = opts.cap_filtering ? detect_symbol_rate_cap(w.penalties, opts.theta_db) : kNoCap;
    w.report = compute_margins(estimate_link_gsnr(w.campaign, cap), catalog, cap);
    w.report.best_config = select_best_config(w.report);
    w.report.verification = verify_margin_accuracy(line, w.report, catalog, curves, policy, center_thz, opts.sim_time_h);
    return w;
}

json to_json(const std::vector<PenaltyEntry>& penalties) {
    json arr = json::array();
    for (const auto& p : penalties) {
        arr.push_back({{"config_id", p.config_id},
                       {"symbol_rate_gbd", p.symbol_rate_gbd},
                       {"working", p.working},
                       {"penalty_db", number_or_null(p.penalty_db)}});
    }
    return arr;
}

json to_json(const MarginReport& report) {
    json margins = json::array();
    for (const auto& m : report.margins) {
        margins.push_back({{"config_id", m.config_id},
                           {"symbol_rate_gbd", m.symbol_rate_gbd},
                           {"line_rate_gbps", m.line_rate_gbps},
                           {"margin_db", m.margin_db}});
    }
    json evidence = json::array();
    for (const auto& r : report.verification.evidence) evidence.push_back(to_json(r));
    return {{"gsnr_est_link_db", report.gsnr_est_link_db},
            {"symbol_rate_cap_gbd", number_or_null(report.symbol_rate_cap_gbd)},
            {"margins", margins},
            {"best_config", report.best_config ? json(*report.best_config) : json(nullptr)},
            {"verification",
             {{"accuracy_bound_db", report.verification.accuracy_bound_db},
              {"status", verification_name(report.verification.status)},
              {"evidence", evidence}}}};
}

}  // namespace osaas::probing
