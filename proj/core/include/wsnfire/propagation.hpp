#pragma once

#include <variant>

#include "wsnfire/geometry.hpp"

namespace wsnfire {

/// Fire spreading at the same constant rate in every direction.
struct CircularModel {
    double rate = 1.0;  ///< m/s
};

/// Constant-rate elliptical fire (head-to-back and length-to-breadth shape).
struct EllipticalModel {
    double rate = 1.0;               ///< m/s at the head
    double head_to_back = 1.0;
    double length_to_breadth = 1.0;
    double heading = 0.0;            ///< radians
};

using SpreadModel = std::variant<CircularModel, EllipticalModel>;

void validate(const SpreadModel& model);

/// Front geometry of the model; a circle is the unit-ratio ellipse.
EllipseShape front_shape(const SpreadModel& model);

double rate_of_spread(const SpreadModel& model);

/// Burned area per squared second: F(t) = coefficient * t^2.
double area_growth_coefficient(const SpreadModel& model);

/// Total burned area F(t) after `t` seconds of unobstructed spread.
double burned_area(const SpreadModel& model, double t);

/// Time at which the unobstructed burned area reaches `area`.
double inverse_burned_area(const SpreadModel& model, double area);

/// First time the front started at `ignition` covers `target`.
double reach_time(const SpreadModel& model, Point ignition, Point target);

}  // namespace wsnfire
