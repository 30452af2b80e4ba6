#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wsnfire/analytic.hpp"
#include "wsnfire/geometry.hpp"
#include "wsnfire/placement.hpp"
#include "wsnfire/propagation.hpp"

namespace wsnfire {

struct GridPlacement {
    double spacing = 1.0;
};

struct RandomPlacement {
    std::size_t count = 1;
};

/// A fixed, caller-supplied layout (never resampled).
struct ExplicitPlacement {
    std::vector<Point> positions;
};

using Placement = std::variant<GridPlacement, RandomPlacement, ExplicitPlacement>;

struct ScenarioConfig {
    RectRegion region{1.0, 1.0};
    Placement placement = RandomPlacement{};
    SpreadModel model = CircularModel{};
    std::size_t ignition_count = 1;
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    /// Unset: resample for random placement only.
    std::optional<bool> resample_layout_each_trial;
    /// Unset: clip for random placement only.
    std::optional<bool> clip_to_region;
    /// Relative tolerance of the union-area integration in clip mode.
    double area_tolerance = 1e-3;
};

bool resamples_layout(const ScenarioConfig& config);
bool clips_to_region(const ScenarioConfig& config);
std::size_t sensor_count(const ScenarioConfig& config);

/// Density parameter of the configured placement.
double characteristic_distance(const ScenarioConfig& config);

/// Throws ParameterError on an unusable configuration.
void validate(const ScenarioConfig& config);

struct TrialOutcome {
    double t_d = 0.0;  ///< seconds
    double a_d = 0.0;  ///< square meters

    friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

/// Detection time and burned area for one realisation. T_d is the smallest
/// reach time over all (ignition, sensor) pairs, all ignitions starting at
/// t = 0. A_d is F(T_d) for a single unclipped ignition, otherwise the area
/// of the union of fronts at T_d inside the region.
TrialOutcome evaluate_trial(const SpreadModel& model, std::span<const Point> ignitions,
                            std::span<const Point> sensors, const RectRegion& region,
                            bool clip_to_region, double area_tolerance = 1e-3);

/// Replays trial `index` of the scenario on its own substream.
TrialOutcome run_trial(const ScenarioConfig& config, std::size_t index);

/// All trials in order. The result depends only on `config`; `threads` = 0
/// picks the hardware concurrency.
std::vector<TrialOutcome> run_trials(const ScenarioConfig& config, unsigned threads = 0);

struct SummaryStats {
    std::size_t n = 0;
    double mean_td = 0.0;
    double var_td = 0.0;
    double se_td = 0.0;
    double se_var_td = 0.0;
    double mean_ad = 0.0;
    double var_ad = 0.0;
    double se_ad = 0.0;
    double se_var_ad = 0.0;
    std::vector<double> ecdf_td;  ///< sorted ascending
    std::vector<double> ecdf_ad;  ///< sorted ascending
};

/// Unbiased sample moments, standard errors sqrt(var/n) of the means,
/// large-sample standard errors of the variances, and sorted samples.
SummaryStats summarize(std::span<const TrialOutcome> outcomes);

/// Two-sided Kolmogorov-Smirnov statistic of a sorted sample against a law.
double ks_distance(std::span<const double> sorted_sample, const AnalyticLaw& law);

/// Asymptotic Kolmogorov critical value sqrt(-ln(alpha/2)/2) / sqrt(n).
double ks_critical_value(std::size_t n, double alpha);

/// Closed-form laws the outcomes of a scenario should follow, where known.
struct ReferenceLaws {
    std::optional<AnalyticLaw> td;
    std::optional<AnalyticLaw> ad;
};

ReferenceLaws reference_laws(const ScenarioConfig& config);

/// CSV with header `trial,t_d,a_d`, full double precision.
void write_outcomes_csv(std::ostream& os, std::span<const TrialOutcome> outcomes);

/// JSON object {n, mean_td, se_td, var_td, mean_ad, se_ad, var_ad, ks_td, ks_ad};
/// KS fields are null when no reference law applies.
std::string summary_json(const SummaryStats& stats, std::optional<double> ks_td,
                         std::optional<double> ks_ad);

}  // namespace wsnfire
