#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wsnfire/comparison.hpp"
#include "wsnfire/errors.hpp"

using namespace wsnfire;

TEST(CompareSweep, DetectionTimeBiasShrinksWithN) {
    ScenarioConfig base;
    base.trials = 20000;
    base.master_seed = 3;
    const std::vector<std::size_t> sizes{10, 100, 1000};
    const Comparison cmp = compare_sweep(base, sizes, 1.0, 0);
    ASSERT_EQ(cmp.rows.size(), 3u);
    EXPECT_EQ(cmp.ecdf_quantity, "a_d");
    double last = 1e9;
    for (const ComparisonRow& r : cmp.rows) {
        EXPECT_DOUBLE_EQ(r.distance, 1.0);
        ASSERT_TRUE(r.analytic_mean_td && r.analytic_mean_ad && r.ks_ad);
        EXPECT_DOUBLE_EQ(*r.analytic_mean_td, 0.5);
        const double bias = std::abs(r.empirical.mean_td - 0.5);
        EXPECT_LT(bias, last) << r.sensors;
        last = bias;
        // The clipped burned area follows (1 - x/A)^N at every N. 4 SE: three rows are checked.
        EXPECT_NEAR(r.empirical.mean_ad, *r.analytic_mean_ad, 4 * r.empirical.se_ad);
        EXPECT_LT(*r.ks_ad, ks_critical_value(r.empirical.n, 0.01));
        EXPECT_TRUE(r.empirical.ecdf_ad.empty());
    }
}

TEST(CompareSweep, EcdfColumnsAreMonotone) {
    ScenarioConfig base;
    base.trials = 2000;
    const std::vector<std::size_t> sizes{10, 1000};
    const Comparison cmp = compare_sweep(base, sizes, 2.0, 0, 25);
    ASSERT_EQ(cmp.ecdf.size(), 50u);
    std::map<std::size_t, std::vector<EcdfPoint>> by_n;
    for (const EcdfPoint& p : cmp.ecdf) by_n[p.sensors].push_back(p);
    for (const auto& [n, pts] : by_n) {
        for (std::size_t i = 1; i < pts.size(); ++i) {
            EXPECT_GT(pts[i].x, pts[i - 1].x);
            EXPECT_GE(pts[i].empirical, pts[i - 1].empirical);
            EXPECT_GE(*pts[i].exact, *pts[i - 1].exact);
            EXPECT_GE(*pts[i].asymptotic, *pts[i - 1].asymptotic);
        }
        EXPECT_EQ(pts.back().empirical, 1.0);
    }
}

TEST(CompareSweep, RejectsBadSweeps) {
    ScenarioConfig base;
    EXPECT_THROW(compare_sweep(base, {}, 1.0), ParameterError);
    const std::vector<std::size_t> zero{0};
    EXPECT_THROW(compare_sweep(base, zero, 1.0), ParameterError);
    const std::vector<std::size_t> ok{10};
    EXPECT_THROW(compare_sweep(base, ok, 0.0), ParameterError);
}

TEST(CompareScenario, GridRowMatchesClosedForms) {
    ScenarioConfig cfg;
    cfg.region = RectRegion(10.0, 10.0);
    cfg.placement = GridPlacement{1.0};
    cfg.trials = 20000;
    cfg.master_seed = 12;
    const Comparison cmp = compare_scenario(cfg, 0);
    ASSERT_EQ(cmp.rows.size(), 1u);
    EXPECT_EQ(cmp.ecdf_quantity, "t_d");
    const ComparisonRow& r = cmp.rows[0];
    EXPECT_NEAR(r.empirical.mean_td, *r.analytic_mean_td, 3 * r.empirical.se_td);
    EXPECT_NEAR(r.empirical.mean_ad, *r.analytic_mean_ad, 3 * r.empirical.se_ad);
    EXPECT_NEAR(r.empirical.var_td, *r.analytic_var_td, 3 * r.empirical.se_var_td);
    for (const EcdfPoint& p : cmp.ecdf) EXPECT_NEAR(p.empirical, *p.exact, 0.02);
}

TEST(ComparisonOutput, CsvAndJson) {
    ScenarioConfig base;
    base.trials = 200;
    const std::vector<std::size_t> sizes{16};
    const Comparison cmp = compare_sweep(base, sizes, 1.0, 1, 3);

    std::ostringstream rows;
    write_rows_csv(rows, cmp);
    const std::string header = rows.str().substr(0, rows.str().find('\n'));
    EXPECT_EQ(header.rfind("N,D,trials,mean_td", 0), 0u);

    std::ostringstream ecdf;
    write_ecdf_csv(ecdf, cmp);
    EXPECT_EQ(ecdf.str().rfind("N,quantity,x,empirical,exact,asymptotic\n16,a_d,0,", 0), 0u);

    const auto j = nlohmann::json::parse(comparison_json(cmp));
    EXPECT_EQ(j["quantity"], "a_d");
    EXPECT_EQ(j["rows"].size(), 1u);
    EXPECT_EQ(j["rows"][0]["N"], 16);
    EXPECT_EQ(j["ecdf"].size(), 3u);
}
