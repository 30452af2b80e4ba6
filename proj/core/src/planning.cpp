#include "wsnfire/planning.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "wsnfire/analytic.hpp"
#include "wsnfire/errors.hpp"

namespace wsnfire {

PlanResult plan(const PlanRequest& request) {
    if (!(request.region_area > 0.0) || !std::isfinite(request.region_area)) {
        throw ParameterError("plan: region area must be positive");
    }
    validate(request.model);
    const bool grid = request.placement == PlacementKind::Grid;
    if (grid && !std::holds_alternative<CircularModel>(request.model)) {
        throw ParameterError("plan: grid laws are only available for circular spread");
    }

    PlanResult result;
    if (const auto* area = std::get_if<AreaTarget>(&request.target)) {
        const double target = area->max_mean_area;
        if (!(target > 0.0) || !std::isfinite(target)) {
            throw ParameterError("plan: target burned area must be positive");
        }
        if (grid) {
            result.distance = std::sqrt(6.0 * target / std::numbers::pi);
            result.assumptions = {
                "square grid, uniform ignition, circular spread: E[A_d] = (pi/6) D^2"};
        } else {
            result.distance = std::sqrt(target);
            result.assumptions = {
                "uniform i.i.d. sensors, large N: A_d ~ Exponential(1/D^2), E[A_d] = D^2",
                "independent of the spread model and of the number of ignitions"};
        }
    } else {
        const double target = std::get<TimeTarget>(request.target).max_mean_time;
        if (!(target > 0.0) || !std::isfinite(target)) {
            throw ParameterError("plan: target detection time must be positive");
        }
        const double rate = rate_of_spread(request.model);
        if (grid) {
            // E[T_d] = c D / R with c = grid_moments(1, 1).mean_td.
            result.distance = target * rate / grid_moments(1.0, 1.0).mean_td;
            result.assumptions = {
                "square grid, uniform ignition, circular spread: "
                "E[T_d] = (sqrt(2) + ln(1 + sqrt(2))) / 6 * D / R"};
        } else {
            // E[T_d] is linear in D.
            result.distance = target / random_td_moments(request.model, 1.0).mean_td;
            result.assumptions = {
                "uniform i.i.d. sensors, large N, one ignition away from the border: "
                "P(T_d > t) = exp(-F(t) / D^2)",
                std::holds_alternative<CircularModel>(request.model)
                    ? "circular spread: E[T_d] = D / (2R)"
                    : "elliptical spread: E[T_d] = 2 sqrt(LB) / (1 + 1/HB) * D / (2R)"};
        }
    }
    const double ratio = request.region_area / (result.distance * result.distance);
    // Absorb rounding noise so exact inversions do not round up a sensor.
    result.count = static_cast<std::size_t>(std::max(1.0, std::ceil(ratio * (1.0 - 1e-12))));
    return result;
}

std::string plan_json(const PlanResult& result) {
    nlohmann::ordered_json j;
    j["D"] = result.distance;
    j["N"] = result.count;
    j["assumptions"] = result.assumptions;
    return j.dump(2);
}

}  // namespace wsnfire
