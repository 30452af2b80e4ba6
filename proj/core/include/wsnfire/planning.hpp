#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "wsnfire/propagation.hpp"

namespace wsnfire {

enum class PlacementKind { Grid, Random };

/// Largest acceptable expected burned area at detection (m^2).
struct AreaTarget {
    double max_mean_area = 0.0;
};

/// Largest acceptable expected time to detection (s).
struct TimeTarget {
    double max_mean_time = 0.0;
};

using PlanTarget = std::variant<AreaTarget, TimeTarget>;

struct PlanRequest {
    double region_area = 0.0;  ///< m^2
    SpreadModel model = CircularModel{};
    PlanTarget target = AreaTarget{};
    PlacementKind placement = PlacementKind::Random;
};

struct PlanResult {
    double distance = 0.0;  ///< characteristic distance D, meters
    std::size_t count = 0;  ///< ceil(area / D^2)
    std::vector<std::string> assumptions;
};

/// Inverts the mean detection-time or burned-area law of the chosen
/// placement for the largest admissible D. Grid laws assume circular spread.
PlanResult plan(const PlanRequest& request);

/// {"D": ..., "N": ..., "assumptions": [...]}
std::string plan_json(const PlanResult& result);

}  // namespace wsnfire
