#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "osaas/core/catalog.hpp"
#include "osaas/core/errors.hpp"
#include "osaas/core/types.hpp"
#include "osaas/core/units.hpp"
#include "osaas/modem/ber.hpp"
#include "support.hpp"

using namespace osaas;

TEST(Units, DbToLinearExamples) {
    EXPECT_DOUBLE_EQ(db_to_linear(0.0), 1.0);
    EXPECT_NEAR(db_to_linear(3.0103), 2.0, 1e-5);
    EXPECT_NEAR(db_to_linear(-10.0), 0.1, 1e-15);
}

TEST(Units, LinearDbRoundTrip) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> expo(-12.0, 12.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = std::pow(10.0, expo(rng));
        EXPECT_NEAR(db_to_linear(linear_to_db(x)) / x, 1.0, 1e-12);
    }
}

TEST(Units, DbOfNonPositiveIsError) {
    EXPECT_THROW(linear_to_db(0.0), DomainError);
    EXPECT_THROW(linear_to_db(-1.0), DomainError);
    EXPECT_THROW(linear_to_db(std::nan("")), DomainError);
}

TEST(Units, QFromBerMatchesBisectionOracle) {
    for (double ber : {2.275e-2, 1.0e-3, 1e-6, 0.2}) {
        const double oracle = 20.0 * std::log10(std::sqrt(2.0) * test_support::erfcinv_bisect(2.0 * ber));
        EXPECT_NEAR(q_from_ber(ber), oracle, 1e-9);
    }
    EXPECT_NEAR(q_from_ber(2.275e-2), 6.02, 0.01);
    EXPECT_NEAR(q_from_ber(1.0e-3), 9.80, 0.01);
}

TEST(Units, QFromBerRejectsBoundaries) {
    EXPECT_THROW(q_from_ber(0.5), DomainError);
    EXPECT_THROW(q_from_ber(0.0), DomainError);
    EXPECT_THROW(q_from_ber(0.7), DomainError);
}

TEST(Units, BerFromQExamples) {
    EXPECT_NEAR(ber_from_q(6.0206) / 2.275e-2, 1.0, 1e-3);
    EXPECT_NEAR(ber_from_q(9.80), 1.0e-3, 2e-5);
    for (double x : {5.0, 8.0, 12.0}) EXPECT_NEAR(q_from_ber(ber_from_q(x)), x, 1e-9);
}

TEST(Units, QIsDecreasingInBer) {
    double prev = q_from_ber(1e-12);
    for (double ber = 1e-11; ber < 0.49; ber *= 1.7) {
        const double q = q_from_ber(ber);
        EXPECT_LT(q, prev);
        prev = q;
    }
}

TEST(Units, OsnrToSnr) {
    EXPECT_DOUBLE_EQ(osnr_to_snr(20.0, 12.5), 20.0);
    EXPECT_NEAR(osnr_to_snr(20.0, 50.0), 13.98, 0.005);
    EXPECT_NEAR(osnr_to_snr(17.0, 69.4), 9.56, 0.005);
    EXPECT_GT(osnr_to_snr(17.0, 30.0), osnr_to_snr(17.0, 31.0));
}

TEST(Units, HarmonicSumOfEqualTermsLoses3dB) {
    EXPECT_NEAR(harmonic_db_sum({20.0, 20.0}), 20.0 - 3.0103, 1e-4);
    EXPECT_NEAR(harmonic_db_sum({13.0, 26.0}), 12.79, 0.005);
    EXPECT_DOUBLE_EQ(harmonic_db_sum({15.0, INFINITY}), 15.0);
}

TEST(Units, GridArithmetic) {
    EXPECT_EQ(to_grid(6.25), 25);
    EXPECT_TRUE(divides_on_grid(400.0, 6.25));
    EXPECT_TRUE(divides_on_grid(125.0, 6.25));
    EXPECT_FALSE(divides_on_grid(100.0, 7.5));
    EXPECT_FALSE(divides_on_grid(100.0, 0.1));
}

TEST(PowerPolicy, CarrierPowerExamples) {
    PltConfig c;
    c.symbol_rate_gbd = 50.0;
    EXPECT_NEAR(carrier_power(ConstantPsd{-23.0}, c), -6.01, 0.005);
    c.symbol_rate_gbd = 69.4;
    EXPECT_NEAR(carrier_power(ConstantPsd{-23.0}, c), -4.59, 0.005);
    for (double rs : {31.5, 46.3, 69.4}) {
        c.symbol_rate_gbd = rs;
        EXPECT_DOUBLE_EQ(carrier_power(ConstantTotalPower{-6.0}, c), -6.0);
    }
}

TEST(PowerPolicy, ConstantPsdIncreasesWithRate) {
    PltConfig c;
    double prev = -1e9;
    for (double rs = 10.0; rs < 100.0; rs += 3.3) {
        c.symbol_rate_gbd = rs;
        const double p = carrier_power(ConstantPsd{-23.0}, c);
        EXPECT_GT(p, prev);
        prev = p;
    }
}

TEST(PowerPolicy, LimitViolation) {
    auto mc = test_support::wide_channel();
    mc.max_total_power_dbm = -5.0;
    mc.max_psd_dbm_per_ghz = -20.0;
    PltConfig c;
    c.symbol_rate_gbd = 69.4;
    EXPECT_THROW(carrier_power(ConstantPsd{-23.0}, c, mc), LimitViolation);
    c.symbol_rate_gbd = 31.5;
    EXPECT_NO_THROW(carrier_power(ConstantPsd{-23.0}, c, mc));
    // -6 dBm over 31.5 GBd is -21 dBm/GHz: fine; over 12 GBd it is too dense.
    EXPECT_NO_THROW(carrier_power(ConstantTotalPower{-6.0}, c, mc));
    c.symbol_rate_gbd = 12.0;
    EXPECT_THROW(carrier_power(ConstantTotalPower{-6.0}, c, mc), LimitViolation);
}

TEST(Rrc, ShapeAndUnitArea) {
    PltConfig c;
    c.symbol_rate_gbd = 69.4;
    EXPECT_DOUBLE_EQ(rrc_psd(c, 0.0), 1.0 / 69.4);
    EXPECT_NEAR(rrc_psd(c, c.occupied_bandwidth_ghz() / 2.0), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(rrc_psd(c, 50.0), 0.0);
    // Trapezoid quadrature oracle.
    const int n = 200000;
    const double hi = c.occupied_bandwidth_ghz() / 2.0 + 1.0;
    double area = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a = -hi + 2.0 * hi * i / n, b = -hi + 2.0 * hi * (i + 1) / n;
        area += 0.5 * (rrc_psd(c, a) + rrc_psd(c, b)) * (b - a);
    }
    EXPECT_NEAR(area, 1.0, 1e-6);
}

TEST(Catalog, OccupiedBandwidth) {
    for (const auto& c : default_catalog()) {
        EXPECT_NEAR(c.occupied_bandwidth_ghz(), 1.19 * c.symbol_rate_gbd, 1e-12);
    }
    PltConfig c;
    c.symbol_rate_gbd = 69.4;
    EXPECT_NEAR(c.occupied_bandwidth_ghz(), 82.59, 0.005);
}

TEST(Catalog, DefaultHasElevenValidConfigs) {
    const auto cat = default_catalog();
    ASSERT_EQ(cat.size(), 11u);
    for (const auto& c : cat) {
        EXPECT_NO_THROW(c.validate());
        EXPECT_LE(c.line_rate_gbps, bits_per_symbol(c.format) * c.symbol_rate_gbd);
    }
}

TEST(Catalog, JsonFieldNamesAndRoundTrip) {
    const auto cat = default_catalog();
    const auto j = catalog_to_json(cat);
    for (const char* key : {"format", "symbol_rate_gbd", "roll_off", "line_rate_gbps", "required_gsnr_db", "fec_threshold_ber"}) {
        EXPECT_TRUE(j[0].contains(key)) << key;
    }
    const auto back = catalog_from_json(j);
    ASSERT_EQ(back.size(), cat.size());
    for (size_t i = 0; i < cat.size(); ++i) {
        EXPECT_EQ(back[i].id(), cat[i].id());
        EXPECT_DOUBLE_EQ(back[i].required_gsnr_db, cat[i].required_gsnr_db);
    }
}

TEST(Catalog, ShippedFileMatchesDefault) {
    const auto file = load_catalog(test_support::scenario_dir() / "catalog-default.json");
    const auto cat = default_catalog();
    ASSERT_EQ(file.size(), cat.size());
    for (size_t i = 0; i < cat.size(); ++i) {
        EXPECT_EQ(file[i].id(), cat[i].id());
        EXPECT_NEAR(file[i].required_gsnr_db, cat[i].required_gsnr_db, 1e-4);
    }
}

TEST(Catalog, RejectsInvalidRecords) {
    auto j = catalog_to_json(default_catalog());
    auto bad = j;
    bad[0]["line_rate_gbps"] = 1000.0;
    EXPECT_THROW(catalog_from_json(bad), ConfigError);
    bad = j;
    bad[0]["fec_threshold_ber"] = 0.5;
    EXPECT_THROW(catalog_from_json(bad), ConfigError);
    bad = j;
    bad[0]["format"] = "DP-64QAM";
    EXPECT_THROW(catalog_from_json(bad), ConfigError);
    bad = j;
    bad.push_back(j[0]);
    EXPECT_THROW(catalog_from_json(bad), ConfigError);
}

TEST(MediaChannel, CarrierMustFit) {
    auto mc = test_support::wide_channel(100.0);
    PltConfig c;
    c.symbol_rate_gbd = 69.4;
    EXPECT_TRUE(mc.fits(c, 193.4));
    EXPECT_FALSE(mc.fits(c, 193.4 + 0.00875));
    mc.center_frequency_thz = 197.0;
    EXPECT_THROW(mc.validate(), ConfigError);
}
