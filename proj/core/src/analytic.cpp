#include "wsnfire/analytic.hpp"

#include <cmath>
#include <numbers>

#include "wsnfire/errors.hpp"

namespace wsnfire {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be positive");
    }
}

void require_non_negative(double v, const char* what) {
    if (!(v >= 0.0)) throw DomainError(std::string(what) + " must be non-negative");
}

// (sqrt(2) + ln(1 + sqrt(2))) / 3: mean distance from a corner of the unit
// square to a uniform point in it.
const double kCornerMeanDistance = (std::numbers::sqrt2 + std::log1p(std::numbers::sqrt2)) / 3.0;

}  // namespace

double grid_td_cdf(double x, double spacing, double rate) {
    require_non_negative(x, "grid_td_cdf: time");
    require_positive(spacing, "grid_td_cdf: spacing");
    require_positive(rate, "grid_td_cdf: rate");

    // Reach radius relative to the half-cell side.
    const double u = rate * x / (0.5 * spacing);
    if (u <= 1.0) return 0.25 * std::numbers::pi * u * u;
    if (u >= std::numbers::sqrt2) return 1.0;
    const double w = std::sqrt(u * u - 1.0);
    return (0.25 * std::numbers::pi - std::atan(w)) * u * u + w;
}

GridMoments grid_moments(double spacing, double rate) {
    require_positive(spacing, "grid_moments: spacing");
    require_positive(rate, "grid_moments: rate");
    const double scale = spacing / rate;
    const double mean = 0.5 * kCornerMeanDistance * scale;
    const double second = scale * scale / 6.0;
    return {mean, second, second - mean * mean, std::numbers::pi / 6.0 * spacing * spacing};
}

double random_ad_survival_exact(double x, double area, std::size_t n, RangeMode mode) {
    require_positive(area, "random_ad_survival_exact: area");
    if (n == 0) throw DomainError("random_ad_survival_exact: sensor count must be at least 1");
    require_non_negative(x, "random_ad_survival_exact: burned area");
    if (x > area) {
        if (mode == RangeMode::Strict) {
            throw DomainError("random_ad_survival_exact: burned area exceeds protected area");
        }
        return 0.0;
    }
    return std::exp(static_cast<double>(n) * std::log1p(-x / area));
}

double random_ad_survival_limit(double x, double distance) {
    require_non_negative(x, "random_ad_survival_limit: burned area");
    require_positive(distance, "random_ad_survival_limit: distance");
    return std::exp(-x / (distance * distance));
}

double random_td_survival(double t, const SpreadModel& model, double distance) {
    require_non_negative(t, "random_td_survival: time");
    require_positive(distance, "random_td_survival: distance");
    return std::exp(-burned_area(model, t) / (distance * distance));
}

TdMoments random_td_moments(const SpreadModel& model, double distance) {
    require_positive(distance, "random_td_moments: distance");
    const EllipseShape s = front_shape(model);
    const double k = 2.0 * std::sqrt(s.length_to_breadth) / (1.0 + 1.0 / s.head_to_back);
    const double scale = k * distance / s.rate;
    return {0.5 * scale, scale * scale / std::numbers::pi,
            (4.0 - std::numbers::pi) / (4.0 * std::numbers::pi) * scale * scale};
}

AnalyticLaw grid_td_law(double spacing, double rate) {
    const GridMoments m = grid_moments(spacing, rate);
    AnalyticLaw law;
    law.survival = [spacing, rate](double x) { return 1.0 - grid_td_cdf(x, spacing, rate); };
    law.mean = m.mean_td;
    law.second_moment = m.second_moment_td;
    law.variance = m.var_td;
    law.support_upper = spacing / (std::numbers::sqrt2 * rate);
    return law;
}

AnalyticLaw grid_ad_law(double spacing) {
    require_positive(spacing, "grid_ad_law: spacing");
    const double d2 = spacing * spacing;
    AnalyticLaw law;
    law.survival = [spacing](double x) {
        require_non_negative(x, "grid_ad_law: burned area");
        return 1.0 - grid_td_cdf(std::sqrt(x / std::numbers::pi), spacing, 1.0);
    };
    // E[A] = pi E[r^2], E[A^2] = pi^2 E[r^4] with r the corner distance in a
    // (D/2)-square: E[r^2] = D^2/6, E[r^4] = 7 D^4 / 180.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    law.mean = std::numbers::pi / 6.0 * d2;
    law.second_moment = pi2 * 7.0 / 180.0 * d2 * d2;
    law.variance = pi2 / 90.0 * d2 * d2;
    law.support_upper = 0.5 * std::numbers::pi * d2;
    return law;
}

AnalyticLaw random_ad_exact_law(double area, std::size_t n) {
    require_positive(area, "random_ad_exact_law: area");
    if (n == 0) throw DomainError("random_ad_exact_law: sensor count must be at least 1");
    const double np1 = static_cast<double>(n) + 1.0;
    const double np2 = static_cast<double>(n) + 2.0;
    AnalyticLaw law;
    law.survival = [area, n](double x) {
        return random_ad_survival_exact(x, area, n, RangeMode::Clamp);
    };
    law.mean = area / np1;
    law.second_moment = 2.0 * area * area / (np1 * np2);
    law.variance = *law.second_moment - *law.mean * *law.mean;
    law.support_upper = area;
    return law;
}

AnalyticLaw random_ad_limit_law(double distance) {
    require_positive(distance, "random_ad_limit_law: distance");
    const double d2 = distance * distance;
    AnalyticLaw law;
    law.survival = [distance](double x) { return random_ad_survival_limit(x, distance); };
    law.mean = d2;
    law.second_moment = 2.0 * d2 * d2;
    law.variance = d2 * d2;
    return law;
}

AnalyticLaw random_td_law(const SpreadModel& model, double distance) {
    const TdMoments m = random_td_moments(model, distance);
    AnalyticLaw law;
    law.survival = [model, distance](double t) { return random_td_survival(t, model, distance); };
    law.mean = m.mean_td;
    law.second_moment = m.second_moment_td;
    law.variance = m.var_td;
    return law;
}

}  // namespace wsnfire
