#include "wsnfire/propagation.hpp"

#include <cmath>
#include <numbers>

#include "wsnfire/errors.hpp"

namespace wsnfire {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

EllipseShape front_shape(const SpreadModel& model) {
    EllipseShape shape = std::visit(
        overloaded{
            [](const CircularModel& m) { return EllipseShape{m.rate, 1.0, 1.0, 0.0}; },
            [](const EllipticalModel& m) {
                return EllipseShape{m.rate, m.head_to_back, m.length_to_breadth, m.heading};
            },
        },
        model);
    validate(shape);
    return shape;
}

void validate(const SpreadModel& model) { (void)front_shape(model); }

double rate_of_spread(const SpreadModel& model) { return front_shape(model).rate; }

double area_growth_coefficient(const SpreadModel& model) {
    const EllipseShape s = front_shape(model);
    const double stretch = 1.0 + 1.0 / s.head_to_back;
    return std::numbers::pi * s.rate * s.rate * stretch * stretch / (4.0 * s.length_to_breadth);
}

double burned_area(const SpreadModel& model, double t) {
    if (!(t >= 0.0)) throw DomainError("burned_area: time must be non-negative");
    return area_growth_coefficient(model) * t * t;
}

double inverse_burned_area(const SpreadModel& model, double area) {
    if (!(area >= 0.0)) throw DomainError("inverse_burned_area: area must be non-negative");
    return std::sqrt(area / area_growth_coefficient(model));
}

double reach_time(const SpreadModel& model, Point ignition, Point target) {
    if (const auto* circ = std::get_if<CircularModel>(&model)) {
        validate(model);
        return std::hypot(target.x - ignition.x, target.y - ignition.y) / circ->rate;
    }
    return ellipse_reach_time(front_shape(model), ignition, target);
}

}  // namespace wsnfire
