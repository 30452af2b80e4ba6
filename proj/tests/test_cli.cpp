#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using wsnfire::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("wsnfire_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SimulateCsvIsByteReproducibleAcrossThreads) {
    const std::vector<std::string> common{"simulate", "--region", "20x20", "--sensors", "400",
                                          "--trials", "300", "--seed", "99"};
    auto with = [&](const std::string& threads, const std::string& file) {
        auto args = common;
        args.insert(args.end(), {"--threads", threads, "--out", path(file)});
        return invoke(args).code;
    };
    ASSERT_EQ(with("1", "a.csv"), 0);
    ASSERT_EQ(with("3", "b.csv"), 0);
    ASSERT_EQ(with("1", "c.csv"), 0);
    const std::string a = slurp(path("a.csv"));
    EXPECT_EQ(a, slurp(path("b.csv")));
    EXPECT_EQ(a, slurp(path("c.csv")));
    EXPECT_EQ(a.rfind("trial,t_d,a_d\n0,", 0), 0u);
    EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 301);
}

TEST_F(CliTest, SimulateJsonSummary) {
    const Result r = invoke({"simulate", "--region", "10x10", "--spacing", "1", "--trials", "2000",
                             "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["n"], 2000);
    EXPECT_NEAR(j["mean_td"].get<double>(), 0.3826, 0.01);
    EXPECT_TRUE(j["ks_td"].is_number());
    EXPECT_TRUE(j["ks_ad"].is_number());
}

TEST_F(CliTest, ConfigFileWithFlagOverrides) {
    std::ofstream(path("cfg.json")) << R"({"region": "30x30", "sensors": 900, "trials": 50,
        "seed": 4, "model": "elliptical", "hb": 2, "lb": 2, "ignitions": 2})";
    const Result base = invoke({"simulate", "--config", path("cfg.json")});
    ASSERT_EQ(base.code, 0) << base.err;
    EXPECT_EQ(std::count(base.out.begin(), base.out.end(), '\n'), 51);
    const Result more = invoke({"simulate", "--config", path("cfg.json"), "--trials", "80"});
    EXPECT_EQ(std::count(more.out.begin(), more.out.end(), '\n'), 81);
    // Same first 50 trials: per-trial streams do not depend on the trial count.
    EXPECT_EQ(more.out.rfind(base.out, 0), 0u);

    std::ofstream(path("bad.json")) << R"({"region": "30x30", "colour": "red"})";
    EXPECT_EQ(invoke({"simulate", "--config", path("bad.json"), "--sensors", "3"}).code, 2);
    std::ofstream(path("broken.json")) << "{";
    EXPECT_EQ(invoke({"simulate", "--config", path("broken.json")}).code, 2);
}

TEST_F(CliTest, ConfigurationErrorsExitTwo) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"bogus"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--sensors", "10"}).code, 2);  // no region
    EXPECT_EQ(invoke({"simulate", "--region", "10", "--sensors", "10"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--region", "10x-1", "--sensors", "10"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--region", "10x10"}).code, 2);  // no placement
    EXPECT_EQ(invoke({"simulate", "--region", "10x10", "--spacing", "0.3"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--region", "10x10", "--sensors", "0"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--region", "10x10", "--sensors", "5", "--spacing", "1"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--region", "10x10", "--sensors", "5", "--hb", "2"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--region", "10x10", "--sensors", "5", "--model", "elliptical",
                      "--hb", "0.5"}).code,
              2);
    EXPECT_EQ(invoke({"plan", "--area", "100", "--target-area", "-1"}).code, 2);
    EXPECT_EQ(invoke({"plan", "--area", "100"}).code, 2);
}

TEST_F(CliTest, DomainErrorsExitThree) {
    EXPECT_EQ(invoke({"analytic", "--law", "grid-td", "--spacing", "1", "--at", "-0.5"}).code, 3);
    EXPECT_EQ(invoke({"analytic", "--law", "ad-exact", "--area", "10", "--sensors", "3", "--at",
                      "11"}).code,
              3);
    const Result clamped = invoke({"analytic", "--law", "ad-exact", "--area", "10", "--sensors",
                                   "3", "--at", "11", "--clamp"});
    EXPECT_EQ(clamped.code, 0);
    EXPECT_EQ(clamped.out, "x,survival\n11,0\n");
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, 0); }

TEST_F(CliTest, AnalyticLaws) {
    const Result cdf = invoke({"analytic", "--law", "grid-td", "--spacing", "1", "--at", "0.5"});
    ASSERT_EQ(cdf.code, 0) << cdf.err;
    EXPECT_EQ(cdf.out.rfind("x,cdf,survival\n0.5,0.785398163397448", 0), 0u);

    const Result m = invoke({"analytic", "--law", "td-moments", "--model", "elliptical", "--hb",
                             "2", "--lb", "2", "--distance", "1", "--format", "json"});
    ASSERT_EQ(m.code, 0) << m.err;
    EXPECT_NEAR(nlohmann::json::parse(m.out)["mean_td"].get<double>(), 0.94280904158206336, 1e-15);

    const Result lim = invoke({"analytic", "--law", "ad-limit", "--area", "100", "--sensors",
                               "100", "--at", "0,1", "--format", "json"});
    ASSERT_EQ(lim.code, 0) << lim.err;
    const auto j = nlohmann::json::parse(lim.out);
    EXPECT_EQ(j[0]["survival"], 1.0);
    EXPECT_NEAR(j[1]["survival"].get<double>(), std::exp(-1.0), 1e-15);

    EXPECT_EQ(invoke({"analytic", "--law", "td-random", "--distance", "1"}).code, 2);  // no --at
}

TEST_F(CliTest, PlanEmitsJson) {
    const Result r = invoke({"plan", "--area", "10000", "--target-time", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_DOUBLE_EQ(j["D"].get<double>(), 1.0);
    EXPECT_EQ(j["N"], 10000);
    EXPECT_FALSE(j["assumptions"].empty());

    const Result g = invoke({"plan", "--area", "100", "--target-area", "0.5235987755982988",
                             "--placement", "grid"});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_EQ(nlohmann::json::parse(g.out)["N"], 100);
}

TEST_F(CliTest, PlanExportsLayout) {
    const Result r = invoke({"plan", "--region", "20x20", "--target-area", "4", "--seed", "3",
                             "--layout-out", path("layout.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["N"], 100);
    const std::string csv = slurp(path("layout.csv"));
    EXPECT_EQ(csv.rfind("x,y\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 101);

    const Result g = invoke({"plan", "--region", "10x10", "--target-area", "0.5235987755982988",
                             "--placement", "grid", "--layout-out", path("grid.csv")});
    ASSERT_EQ(g.code, 0) << g.err;
    const std::string grid = slurp(path("grid.csv"));
    EXPECT_EQ(std::count(grid.begin(), grid.end(), '\n'), 122);

    EXPECT_EQ(invoke({"plan", "--area", "100", "--target-area", "1", "--layout-out",
                      path("x.csv")}).code,
              2);
    EXPECT_EQ(invoke({"plan", "--area", "99", "--region", "10x10", "--target-area", "1"}).code, 2);
}

TEST_F(CliTest, CompareSweepWritesBothTables) {
    const Result r = invoke({"compare", "--sweep", "10,100", "--trials", "500", "--seed", "1",
                             "--ecdf-out", path("ecdf.csv"), "--ecdf-points", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
    const std::string ecdf = slurp(path("ecdf.csv"));
    EXPECT_EQ(std::count(ecdf.begin(), ecdf.end(), '\n'), 11);

    const Result g = invoke({"compare", "--region", "4x4", "--spacing", "1", "--trials", "300",
                             "--format", "json"});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_EQ(nlohmann::json::parse(g.out)["quantity"], "t_d");

    EXPECT_EQ(invoke({"compare", "--sweep", "10,x"}).code, 2);
}
