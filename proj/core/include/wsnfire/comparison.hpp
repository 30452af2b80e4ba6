#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsnfire/montecarlo.hpp"

namespace wsnfire {

/// Empirical statistics of one scenario next to their closed-form values.
struct ComparisonRow {
    std::size_t sensors = 0;
    double distance = 0.0;
    SummaryStats empirical;  // ECDF arrays are dropped after the table is built
    std::optional<double> analytic_mean_td;
    std::optional<double> analytic_var_td;
    std::optional<double> analytic_mean_ad;
    std::optional<double> analytic_var_ad;
    std::optional<double> ks_td;
    std::optional<double> ks_ad;
};

/// CDF of the compared quantity at one abscissa: empirical, the exact law
/// of the scenario, and the large-area limit law.
struct EcdfPoint {
    std::size_t sensors = 0;
    double x = 0.0;
    double empirical = 0.0;
    std::optional<double> exact;
    std::optional<double> asymptotic;
};

struct Comparison {
    std::string ecdf_quantity;  ///< "a_d" (random placement) or "t_d" (grid)
    std::vector<ComparisonRow> rows;
    std::vector<EcdfPoint> ecdf;
};

/// Random-placement sweep. Row i simulates `sizes[i]` sensors in the square
/// of area sizes[i] * distance^2 with master seed
/// base.master_seed + i * 0x9E3779B97F4A7C15; all other settings come from
/// `base`. The ECDF table compares A_d with (1 - x/A)^N and exp(-x/D^2).
Comparison compare_sweep(const ScenarioConfig& base, std::span<const std::size_t> sizes,
                         double distance, unsigned threads = 0, std::size_t ecdf_points = 41);

/// Single-scenario comparison. For grid placement the ECDF table compares
/// T_d with the grid law and, as the asymptotic column, the random-placement
/// law at the same D.
Comparison compare_scenario(const ScenarioConfig& config, unsigned threads = 0,
                            std::size_t ecdf_points = 41);

void write_rows_csv(std::ostream& os, const Comparison& cmp);
void write_ecdf_csv(std::ostream& os, const Comparison& cmp);
std::string comparison_json(const Comparison& cmp);

}  // namespace wsnfire
