#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "osaas/core/errors.hpp"
#include "osaas/modem/curve.hpp"
#include "osaas/probing/analysis.hpp"
#include "osaas/probing/campaign.hpp"
#include "osaas/probing/regime.hpp"
#include "osaas/probing/sweep.hpp"
#include "support.hpp"

using namespace osaas;
using namespace osaas::probing;
using osaas::test_support::ConstantGsnrLine;

namespace {

const Catalog& catalog() {
    static const Catalog c = default_catalog();
    return c;
}

const CurveSet& curves() {
    static const CurveSet c = characterize_catalog(ModemModel::matched(), catalog());
    return c;
}

const PltConfig& by_id(const std::string& id) { return find_config(catalog(), id); }

// GSNR given by a function of the config, carrier and launch power.
class FunctionLine : public ProbeLine {
public:
    using Fn = std::function<double(const PltConfig&, double carrier_thz, double launch_dbm)>;
    FunctionLine(MediaChannel mc, Fn fn) : mc_(mc), fn_(std::move(fn)) {}
    const MediaChannel& media_channel() const override { return mc_; }
    BerReading probe(const PltConfig& c, const PowerPolicy& policy, double carrier_thz, double) override {
        if (!mc_.fits(c, carrier_thz)) throw CarrierRejected(c.id());
        const double g = fn_(c, carrier_thz, carrier_power(policy, c, mc_));
        BerReading r;
        r.pre_fec_ber = ber_from_snr(c.format, harmonic_db_sum({g, modem_.snr_modem_db(c)}));
        r.post_fec_ok = r.pre_fec_ber <= c.fec_threshold_ber;
        return r;
    }

private:
    MediaChannel mc_;
    Fn fn_;
    ModemModel modem_ = ModemModel::matched();
};

}  // namespace

TEST(Campaign, WorkingOutageAndUnusable) {
    ConstantGsnrLine line(test_support::wide_channel(), ModemModel::matched(), 12.0);
    const auto camp = run_extended_probe(line, catalog(), curves(), ConstantPsd{-23.0}, 193.4);
    ASSERT_EQ(camp.results.size(), catalog().size());
    for (const auto& r : camp.results) {
        const auto& c = by_id(r.config_id);
        if (c.required_gsnr_db < 12.0) {
            EXPECT_EQ(r.status, ProbeStatus::Working) << r.config_id;
            EXPECT_NEAR(*r.gsnr_est_db, 12.0, 0.02);
        } else {
            EXPECT_EQ(r.status, ProbeStatus::Outage) << r.config_id;
            EXPECT_FALSE(r.gsnr_est_db);
        }
    }
    // Far above the characterized range.
    line.set_default(40.0);
    const auto r = probe_config(line, curves(), catalog()[0], ConstantPsd{-23.0}, 193.4);
    EXPECT_EQ(r.status, ProbeStatus::Unusable);
}

TEST(Campaign, RejectedCarrierIsUnusable) {
    ConstantGsnrLine line(test_support::wide_channel(50.0), ModemModel::matched(), 15.0);
    const auto r = probe_config(line, curves(), by_id("DP-QPSK-69.4-200G"), ConstantPsd{-23.0}, 193.4);
    EXPECT_EQ(r.status, ProbeStatus::Unusable);
    EXPECT_FALSE(r.note.empty());
}

TEST(Campaign, LimitViolationIsUnusable) {
    auto mc = test_support::wide_channel();
    mc.max_total_power_dbm = -10.0;
    FunctionLine line(mc, [](const PltConfig&, double, double) { return 15.0; });
    const auto r = probe_config(line, curves(), by_id("DP-QPSK-69.4-200G"), ConstantPsd{-23.0}, 193.4);
    EXPECT_EQ(r.status, ProbeStatus::Unusable);
}

TEST(Campaign, MissingCurveIsConfigError) {
    ConstantGsnrLine line(test_support::wide_channel(), ModemModel::matched(), 15.0);
    CurveSet empty;
    EXPECT_THROW(probe_config(line, empty, catalog()[0], ConstantPsd{-23.0}, 193.4), ConfigError);
}

TEST(Analysis, PenaltiesRelativeToBestAndCap) {
    // Filtering-like penalty rising with symbol rate.
    FunctionLine line(test_support::wide_channel(), [](const PltConfig& c, double, double) {
        return 16.0 - std::max(0.0, c.symbol_rate_gbd - 45.0) * 0.2;
    });
    const auto camp = run_extended_probe(line, catalog(), curves(), ConstantPsd{-23.0}, 193.4);
    const auto pen = compute_penalties(camp);
    for (const auto& p : pen) {
        if (!p.working) continue;
        const double expected = std::max(0.0, p.symbol_rate_gbd - 45.0) * 0.2;
        EXPECT_NEAR(p.penalty_db, expected, 0.03) << p.config_id;
    }
    // Penalty 2.0 at 55 GBd: the cap is the largest rate at or below that.
    EXPECT_DOUBLE_EQ(detect_symbol_rate_cap(pen, 2.0), 52.0);
    EXPECT_DOUBLE_EQ(detect_symbol_rate_cap(pen, 5.0), 69.4);
    double sum = 0.0;
    int n = 0;
    for (const auto& c : catalog()) {
        if (c.symbol_rate_gbd > 46.3 + 1e-9) continue;
        sum += 16.0 - std::max(0.0, c.symbol_rate_gbd - 45.0) * 0.2;
        ++n;
    }
    EXPECT_NEAR(estimate_link_gsnr(camp, 46.3), sum / n, 0.02);
}

TEST(Analysis, CapFromPenaltyTable) {
    std::vector<PenaltyEntry> pen;
    for (auto [rs, p] : std::vector<std::pair<double, double>>{{31.5, 0.2}, {34.5, 0.0}, {46.3, 0.5}, {55.6, 1.1}, {69.4, 7.1}}) {
        pen.push_back({"c" + std::to_string(rs), rs, true, p});
    }
    EXPECT_DOUBLE_EQ(detect_symbol_rate_cap(pen, 2.0), 55.6);
    EXPECT_DOUBLE_EQ(detect_symbol_rate_cap(pen, 1.0), 46.3);
    pen.back().working = false;
    EXPECT_DOUBLE_EQ(detect_symbol_rate_cap(pen, 10.0), 55.6);
}

TEST(Analysis, NoWorkingConfigIsNoSignal) {
    ConstantGsnrLine line(test_support::wide_channel(), ModemModel::matched(), 3.0);
    const auto camp = run_extended_probe(line, catalog(), curves(), ConstantPsd{-23.0}, 193.4);
    EXPECT_THROW(compute_penalties(camp), NoSignal);
    EXPECT_THROW(estimate_link_gsnr(camp, kNoCap), NoSignal);
    EXPECT_THROW(run_margin_workflow(line, catalog(), curves(), ConstantPsd{-23.0}, 193.4), NoSignal);
}

TEST(Analysis, MarginsAndBestConfig) {
    const auto rep = compute_margins(12.0, catalog(), 55.5);
    for (const auto& m : rep.margins) {
        EXPECT_LE(m.symbol_rate_gbd, 55.5);
        EXPECT_NEAR(m.margin_db, 12.0 - by_id(m.config_id).required_gsnr_db, 1e-12);
    }
    const auto best = select_best_config(rep);
    ASSERT_TRUE(best);
    const auto& c = by_id(*best);
    EXPECT_GT(12.0, c.required_gsnr_db);
    for (const auto& m : rep.margins) {
        if (m.margin_db > 0.0) {
            EXPECT_LE(m.line_rate_gbps, c.line_rate_gbps);
        }
    }
    EXPECT_FALSE(select_best_config(compute_margins(5.0, catalog(), kNoCap)));
}

TEST(Analysis, VerificationOnConstantLine) {
    ConstantGsnrLine line(test_support::wide_channel(), ModemModel::matched(), 12.0);
    const auto w = run_margin_workflow(line, catalog(), curves(), ConstantPsd{-23.0}, 193.4);
    EXPECT_NEAR(w.report.gsnr_est_link_db, 12.0, 0.02);
    EXPECT_EQ(w.report.verification.status, VerificationStatus::NoFalsePredictions);
    EXPECT_DOUBLE_EQ(w.report.verification.accuracy_bound_db, 0.0);
}

TEST(Analysis, VerificationCatchesOverestimate) {
    ConstantGsnrLine line(test_support::wide_channel(), ModemModel::matched(), 11.0);
    // Pretend the estimate is 0.5 dB too optimistic.
    const auto rep = compute_margins(11.5, catalog(), kNoCap);
    const auto v = verify_margin_accuracy(line, rep, catalog(), curves(), ConstantPsd{-23.0}, 193.4);
    EXPECT_EQ(v.status, VerificationStatus::FalsePredictions);
    EXPECT_GT(v.accuracy_bound_db, 0.0);
    EXPECT_LE(v.accuracy_bound_db, 0.5);
}

TEST(Sweep, CentersStayInsideChannel) {
    const auto mc = test_support::wide_channel(125.0);
    const auto& c = by_id("DP-QPSK-31.5-100G");
    const auto centers = sweep_centers(mc, c, 6.25);
    ASSERT_FALSE(centers.empty());
    for (double f : centers) EXPECT_TRUE(mc.fits(c, f));
    // Occupied half-width 18.74 GHz leaves offsets up to 43.76 GHz: k = -7..7.
    EXPECT_EQ(centers.size(), 15u);
    EXPECT_TRUE(sweep_centers(test_support::wide_channel(50.0), by_id("DP-QPSK-69.4-200G"), 6.25).empty());
}

TEST(Sweep, NonDividingStepRejected) {
    ConstantGsnrLine line(test_support::wide_channel(100.0), ModemModel::matched(), 15.0);
    EXPECT_THROW(run_frequency_sweep(line, {catalog()[0]}, curves(), 7.5, ConstantPsd{-23.0}), ConfigError);
    EXPECT_NO_THROW(run_frequency_sweep(line, {catalog()[0]}, curves(), 6.25, ConstantPsd{-23.0}));
}

TEST(Sweep, MisalignmentOfParabolicProfile) {
    const auto mc = test_support::wide_channel(150.0);
    for (double true_off : {-7.0, 0.0, 4.3}) {
        FunctionLine line(mc, [&](const PltConfig&, double f, double) {
            const double x = (f - mc.center_frequency_thz) * 1000.0 - true_off;
            return 15.0 - 0.004 * x * x;
        });
        const auto prof = run_frequency_sweep(line, {by_id("DP-QPSK-31.5-100G")}, curves(), 6.25, ConstantPsd{-23.0});
        const auto m = detect_misalignment(prof);
        EXPECT_FALSE(m.indeterminate);
        EXPECT_NEAR(m.offset_ghz, true_off, 0.2);
    }
}

TEST(Sweep, FlatProfileIsIndeterminate) {
    ConstantGsnrLine line(test_support::wide_channel(150.0), ModemModel::matched(), 15.0);
    const auto prof = run_frequency_sweep(line, {by_id("DP-QPSK-31.5-100G")}, curves(), 6.25, ConstantPsd{-23.0});
    EXPECT_TRUE(detect_misalignment(prof).indeterminate);
}

TEST(Sweep, TiltOfLinearProfile) {
    const auto mc = test_support::wide_channel(400.0);
    FunctionLine line(mc, [&](const PltConfig&, double f, double) {
        return 15.0 - 2.5 * (f - mc.center_frequency_thz) * 1000.0 / 400.0;
    });
    const auto prof = run_frequency_sweep(line, {by_id("DP-QPSK-31.5-100G")}, curves(), 6.25, ConstantPsd{-23.0});
    const auto tr = profile_tilt_ripple(prof, "DP-QPSK-31.5-100G");
    EXPECT_NEAR(tr.tilt_db, 2.5, 0.02);
    EXPECT_LT(tr.ripple_db, 0.02);
    const auto csv = to_csv(prof);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "freq_thz,config_id,gsnr_db");
}

TEST(Regime, ClassifyDelta) {
    EXPECT_EQ(classify_delta(0.5), Regime::Linear);
    EXPECT_EQ(classify_delta(-0.5), Regime::Nonlinear);
    EXPECT_EQ(classify_delta(0.05), Regime::NearOptimum);
    EXPECT_EQ(classify_delta(-0.1), Regime::NearOptimum);
}

TEST(Regime, LinearAndNonlinearLines) {
    // GSNR rising with launch power versus falling with it.
    FunctionLine lin(test_support::wide_channel(), [](const PltConfig&, double, double p) { return 12.0 + 0.9 * (p + 5.0); });
    FunctionLine nl(test_support::wide_channel(), [](const PltConfig&, double, double p) { return 12.0 - 1.5 * (p + 5.0); });
    const auto a = detect_operation_regime(lin, catalog(), curves(), -23.0, 69.4, 193.4);
    const auto b = detect_operation_regime(nl, catalog(), curves(), -23.0, 69.4, 193.4);
    for (const auto& e : a.entries) {
        if (std::abs(e.symbol_rate_gbd - 69.4) < 1e-9) {
            EXPECT_EQ(e.regime, Regime::NearOptimum);
        } else if (e.regime) {
            EXPECT_EQ(*e.regime, Regime::Linear) << e.config_id;
            EXPECT_NEAR(e.recommended_power_delta_db, 10.0 * std::log10(69.4 / e.symbol_rate_gbd), 1e-9);
        }
    }
    int classified = 0;
    for (const auto& e : b.entries) {
        if (e.regime && std::abs(e.symbol_rate_gbd - 69.4) > 1e-9) {
            EXPECT_EQ(*e.regime, Regime::Nonlinear) << e.config_id;
            EXPECT_LT(e.recommended_power_delta_db, 0.0);
            ++classified;
        }
    }
    EXPECT_GT(classified, 0);
}

// The probing library sees the line only through the ProbeLine boundary.
TEST(BlackBox, ProbingSourcesDoNotReachIntoSimulator) {
    const std::filesystem::path root(OSAAS_SOURCE_DIR);
    const std::regex forbidden(R"(osaas/sim/|ground_truth|SimulatedLine|LinkSpec)");
    int files = 0;
    for (const auto& dir : {root / "src" / "probing", root / "include" / "osaas" / "probing"}) {
        for (const auto& e : std::filesystem::directory_iterator(dir)) {
            std::ifstream in(e.path());
            std::stringstream ss;
            ss << in.rdbuf();
            EXPECT_FALSE(std::regex_search(ss.str(), forbidden)) << e.path();
            ++files;
        }
    }
    EXPECT_GE(files, 8);
}
