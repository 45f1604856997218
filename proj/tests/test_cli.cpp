#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "osaas/cli/commands.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace osaas::cli;

namespace {

std::string scen(const std::string& name) { return (osaas::test_support::scenario_dir() / (name + ".json")).string(); }
std::string catalog() { return scen("catalog-default"); }

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), "osaas-probe");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str() + err.str();
    return rc;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        unsetenv("OSAAS_PROBE_SEED");
        dir_ = fs::temp_directory_path() / ("osaas_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        ASSERT_EQ(run({"characterize", "--catalog", catalog(), "--out", dir_.string()}), kExitOk);
    }
    void TearDown() override {
        unsetenv("OSAAS_PROBE_SEED");
        fs::remove_all(dir_);
    }
    fs::path dir_;
};

}  // namespace

TEST_F(Cli, CharacterizeWritesOneCurvePerConfig) {
    int n = 0;
    for (const auto& e : fs::directory_iterator(dir_ / "curves")) n += e.path().extension() == ".json";
    EXPECT_EQ(n, 11);
}

TEST_F(Cli, ProbeWritesMarginReport) {
    ASSERT_EQ(run({"probe", "--scenario", scen("LH-1016"), "--catalog", catalog(), "--seed", "5", "--out", dir_.string()}),
              kExitOk);
    const auto j = nlohmann::json::parse(slurp(dir_ / "margin_report.json"));
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["seed"], 5);
    EXPECT_TRUE(j["report"].contains("gsnr_est_link_db"));
    EXPECT_TRUE(j["report"]["verification"].contains("accuracy_bound_db"));
}

TEST_F(Cli, SameSeedSameBytes) {
    const auto a = dir_ / "a", b = dir_ / "b";
    fs::create_directories(a);
    fs::create_directories(b);
    fs::copy(dir_ / "curves", a / "curves", fs::copy_options::recursive);
    fs::copy(dir_ / "curves", b / "curves", fs::copy_options::recursive);
    for (const auto& d : {a, b}) {
        ASSERT_EQ(run({"probe", "--scenario", scen("B-822"), "--catalog", catalog(), "--seed", "9", "--out", d.string()}),
                  kExitOk);
    }
    EXPECT_EQ(slurp(a / "margin_report.json"), slurp(b / "margin_report.json"));
}

TEST_F(Cli, EnvSeedIsFallback) {
    setenv("OSAAS_PROBE_SEED", "77", 1);
    ASSERT_EQ(run({"probe", "--scenario", scen("LH-1016"), "--catalog", catalog(), "--out", dir_.string()}), kExitOk);
    EXPECT_EQ(nlohmann::json::parse(slurp(dir_ / "margin_report.json"))["seed"], 77);
    ASSERT_EQ(run({"probe", "--scenario", scen("LH-1016"), "--catalog", catalog(), "--seed", "3", "--out", dir_.string()}),
              kExitOk);
    EXPECT_EQ(nlohmann::json::parse(slurp(dir_ / "margin_report.json"))["seed"], 3);
    setenv("OSAAS_PROBE_SEED", "abc", 1);
    EXPECT_EQ(run({"probe", "--scenario", scen("LH-1016"), "--catalog", catalog(), "--out", dir_.string()}),
              kExitConfigError);
}

TEST_F(Cli, NoSignalExitCode) {
    EXPECT_EQ(run({"probe", "--scenario", scen("absurd-length"), "--catalog", catalog(), "--out", dir_.string()}),
              kExitNoSignal);
}

TEST_F(Cli, MissingCurvesIsConfigError) {
    EXPECT_EQ(run({"probe", "--scenario", scen("LH-1016"), "--catalog", catalog(), "--out", (dir_ / "empty").string()}),
              kExitConfigError);
}

TEST_F(Cli, NonDividingStepIsConfigError) {
    EXPECT_EQ(run({"sweep", "--scenario", scen("LH-1016"), "--catalog", catalog(), "--step-ghz", "7.5", "--out",
                   dir_.string()}),
              kExitConfigError);
}

TEST_F(Cli, InvalidScenarioExitCode) {
    const auto bad = dir_ / "bad.json";
    std::ofstream(bad) << R"({"schema_version": 1, "name": "x"})";
    EXPECT_EQ(run({"probe", "--scenario", bad.string(), "--catalog", catalog(), "--out", dir_.string()}),
              kExitInvalidScenario);
    EXPECT_EQ(run({"probe", "--scenario", (dir_ / "missing.json").string(), "--catalog", catalog(), "--out",
                   dir_.string()}),
              kExitInvalidScenario);
}

TEST_F(Cli, ParseErrors) {
    EXPECT_EQ(run({"frobnicate"}), kExitConfigError);
    EXPECT_EQ(run({"probe", "--scenario", scen("LH-1016")}), kExitConfigError);
    EXPECT_EQ(run({"probe", "--scenario", scen("LH-1016"), "--catalog", catalog(), "--seed", "x"}), kExitConfigError);
}

TEST_F(Cli, SweepRegimeThroughputMonitorOutputs) {
    const auto o = dir_.string();
    ASSERT_EQ(run({"sweep", "--scenario", scen("C-284"), "--catalog", catalog(), "--out", o}), kExitOk);
    EXPECT_TRUE(fs::exists(dir_ / "profile.csv"));
    EXPECT_TRUE(fs::exists(dir_ / "sweep_summary.json"));
    ASSERT_EQ(run({"regime", "--scenario", scen("A-144"), "--catalog", catalog(), "--out", o}), kExitOk);
    EXPECT_TRUE(fs::exists(dir_ / "regime_report.json"));
    ASSERT_EQ(run({"throughput", "--scenario", scen("A-652"), "--scenario", scen("B-485"), "--catalog", catalog(),
                   "--out", o}),
              kExitOk);
    const auto t = nlohmann::json::parse(slurp(dir_ / "throughput_report.json"));
    EXPECT_EQ(t["simulator_assisted"], true);
    ASSERT_EQ(run({"monitor", "--scenario", scen("LH-3751-monitor"), "--catalog", catalog(), "--out", o}), kExitOk);
    EXPECT_TRUE(fs::exists(dir_ / "monitor.csv"));
    EXPECT_TRUE(fs::exists(dir_ / "monitor_summary.json"));
}
