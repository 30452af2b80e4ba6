#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "wsnfire/errors.hpp"
#include "wsnfire/montecarlo.hpp"
#include "wsnfire/planning.hpp"

using namespace wsnfire;

TEST(Plan, RandomAreaTarget) {
    const PlanResult r = plan({1e4, CircularModel{1.0}, AreaTarget{1.0}, PlacementKind::Random});
    EXPECT_DOUBLE_EQ(r.distance, 1.0);
    EXPECT_EQ(r.count, 10000u);
    EXPECT_FALSE(r.assumptions.empty());
}

TEST(Plan, GridAreaTarget) {
    const PlanResult r =
        plan({100.0, CircularModel{3.0}, AreaTarget{std::numbers::pi / 6}, PlacementKind::Grid});
    EXPECT_NEAR(r.distance, 1.0, 1e-15);
    EXPECT_EQ(r.count, 100u);
}

TEST(Plan, TimeTargets) {
    const PlanResult circ =
        plan({1e4, CircularModel{1.0}, TimeTarget{0.5}, PlacementKind::Random});
    EXPECT_DOUBLE_EQ(circ.distance, 1.0);
    EXPECT_EQ(circ.count, 10000u);

    // k = 2 sqrt(2) / 1.5 for HB = LB = 2.
    const PlanResult ell =
        plan({1e4, EllipticalModel{1.0, 2.0, 2.0, 0.0}, TimeTarget{0.5}, PlacementKind::Random});
    EXPECT_NEAR(ell.distance, 1.5 / (2 * std::numbers::sqrt2), 1e-15);

    const PlanResult grid = plan({1e4, CircularModel{2.0}, TimeTarget{1.0}, PlacementKind::Grid});
    EXPECT_NEAR(grid.distance,
                1.0 * 2.0 * 6.0 / (std::numbers::sqrt2 + std::log(1 + std::numbers::sqrt2)), 1e-14);
}

TEST(Plan, Errors) {
    EXPECT_THROW(plan({1e4, CircularModel{1.0}, AreaTarget{0.0}, PlacementKind::Random}),
                 ParameterError);
    EXPECT_THROW(plan({1e4, CircularModel{1.0}, TimeTarget{-1.0}, PlacementKind::Grid}),
                 ParameterError);
    EXPECT_THROW(plan({0.0, CircularModel{1.0}, AreaTarget{1.0}, PlacementKind::Random}),
                 ParameterError);
    EXPECT_THROW(
        plan({1e4, EllipticalModel{1.0, 2.0, 2.0, 0.0}, AreaTarget{1.0}, PlacementKind::Grid}),
        ParameterError);
}

TEST(Plan, JsonShape) {
    const auto j = nlohmann::json::parse(
        plan_json(plan({400.0, CircularModel{1.0}, AreaTarget{4.0}, PlacementKind::Random})));
    EXPECT_EQ(j["D"], 2.0);
    EXPECT_EQ(j["N"], 100);
    EXPECT_TRUE(j["assumptions"].is_array());
}

// Simulating at the planned density recovers the requested mean.
TEST(Plan, SimulationAtPlannedDensityHitsTarget) {
    const double area = 2500.0;
    {
        const PlanResult r =
            plan({area, CircularModel{1.0}, AreaTarget{1.0}, PlacementKind::Random});
        ScenarioConfig cfg;
        cfg.region = RectRegion(50.0, 50.0);
        cfg.placement = RandomPlacement{r.count};
        cfg.trials = 4000;
        cfg.master_seed = 8;
        const SummaryStats s = summarize(run_trials(cfg));
        EXPECT_NEAR(s.mean_ad, 1.0, 3 * s.se_ad);
    }
    {
        const PlanResult r =
            plan({area, CircularModel{2.0}, TimeTarget{0.25}, PlacementKind::Random});
        ScenarioConfig cfg;
        cfg.region = RectRegion(50.0, 50.0);
        cfg.placement = RandomPlacement{r.count};
        cfg.model = CircularModel{2.0};
        cfg.trials = 4000;
        cfg.master_seed = 9;
        const SummaryStats s = summarize(run_trials(cfg));
        EXPECT_NEAR(s.mean_td, 0.25, 3 * s.se_td);
    }
}
