#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "wsnfire/propagation.hpp"

namespace wsnfire {

/// A distribution given by its survival function S(x) = P(X > x), plus
/// whichever moments are known in closed form.
struct AnalyticLaw {
    std::function<double(double)> survival;
    std::optional<double> mean;
    std::optional<double> second_moment;
    std::optional<double> variance;
    std::optional<double> support_upper;

    double cdf(double x) const { return 1.0 - survival(x); }
};

/// What to do with arguments past the support of a finite law.
enum class RangeMode {
    Strict,  ///< throw DomainError
    Clamp,   ///< return the limiting probability
};

// --- Regular square grid, circular spread ------------------------------------

/// P(T_d <= x) for sensors on a square lattice of spacing D, fire spreading
/// at rate R from a uniform ignition point. Supported on [0, D/(sqrt(2) R)].
double grid_td_cdf(double x, double spacing, double rate);

struct GridMoments {
    double mean_td;
    double second_moment_td;
    double var_td;
    double mean_ad;
};

GridMoments grid_moments(double spacing, double rate);

// --- Uniform random placement -------------------------------------------------

/// (1 - x/A)^N: probability that none of N uniform sensors lies inside a
/// burned region of area x within a protected area A.
double random_ad_survival_exact(double x, double area, std::size_t n,
                                RangeMode mode = RangeMode::Strict);

/// exp(-x/D^2): large-N limit of the burned-area survival.
double random_ad_survival_limit(double x, double distance);

/// exp(-F(t)/D^2) with F the model's burned-area law.
double random_td_survival(double t, const SpreadModel& model, double distance);

struct TdMoments {
    double mean_td;
    double second_moment_td;
    double var_td;
};

/// Moments of the exp(-F(t)/D^2) law. The elliptical case is the circular
/// one with time scaled by k = 2 sqrt(LB) / (1 + 1/HB).
TdMoments random_td_moments(const SpreadModel& model, double distance);

// --- Laws as values, for goodness-of-fit checks ------------------------------

AnalyticLaw grid_td_law(double spacing, double rate);

/// Burned area at detection on a grid with unclipped circular spread,
/// A_d = pi (R T_d)^2. Independent of the rate.
AnalyticLaw grid_ad_law(double spacing);

AnalyticLaw random_ad_exact_law(double area, std::size_t n);
AnalyticLaw random_ad_limit_law(double distance);
AnalyticLaw random_td_law(const SpreadModel& model, double distance);

}  // namespace wsnfire
