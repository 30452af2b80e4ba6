#include "wsnfire/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

#include "wsnfire/errors.hpp"

namespace wsnfire {

namespace {

struct CdfColumns {
    std::optional<AnalyticLaw> exact;
    std::optional<AnalyticLaw> asymptotic;
};

CdfColumns ecdf_columns(const ScenarioConfig& config, const ReferenceLaws& laws) {
    CdfColumns cols;
    const double d = characteristic_distance(config);
    if (std::holds_alternative<GridPlacement>(config.placement)) {
        cols.exact = laws.td;
        if (config.ignition_count == 1) cols.asymptotic = random_td_law(config.model, d);
    } else {
        if (std::holds_alternative<RandomPlacement>(config.placement) && clips_to_region(config) &&
            resamples_layout(config)) {
            cols.exact = laws.ad;
        }
        cols.asymptotic = random_ad_limit_law(d);
    }
    return cols;
}

std::optional<double> ks_or_null(const std::optional<AnalyticLaw>& law,
                                 const std::vector<double>& sample) {
    if (!law) return std::nullopt;
    return ks_distance(sample, *law);
}

void append_row(Comparison& cmp, const ScenarioConfig& config, unsigned threads,
                std::size_t ecdf_points) {
    const std::vector<TrialOutcome> outcomes = run_trials(config, threads);
    const ReferenceLaws laws = reference_laws(config);

    ComparisonRow row;
    row.sensors = sensor_count(config);
    row.distance = characteristic_distance(config);
    row.empirical = summarize(outcomes);
    if (laws.td) {
        row.analytic_mean_td = laws.td->mean;
        row.analytic_var_td = laws.td->variance;
    }
    if (laws.ad) {
        row.analytic_mean_ad = laws.ad->mean;
        row.analytic_var_ad = laws.ad->variance;
    }
    row.ks_td = ks_or_null(laws.td, row.empirical.ecdf_td);
    row.ks_ad = ks_or_null(laws.ad, row.empirical.ecdf_ad);

    const CdfColumns cols = ecdf_columns(config, laws);
    const std::vector<double>& sample =
        cmp.ecdf_quantity == "t_d" ? row.empirical.ecdf_td : row.empirical.ecdf_ad;
    const double upper = sample.back();
    const std::size_t points = std::max<std::size_t>(ecdf_points, 2);
    for (std::size_t i = 0; i < points; ++i) {
        const double x = upper * static_cast<double>(i) / static_cast<double>(points - 1);
        EcdfPoint p;
        p.sensors = row.sensors;
        p.x = x;
        p.empirical = static_cast<double>(std::upper_bound(sample.begin(), sample.end(), x) -
                                          sample.begin()) /
                      static_cast<double>(sample.size());
        if (cols.exact) p.exact = cols.exact->cdf(x);
        if (cols.asymptotic) p.asymptotic = cols.asymptotic->cdf(x);
        cmp.ecdf.push_back(p);
    }

    row.empirical.ecdf_td.clear();
    row.empirical.ecdf_td.shrink_to_fit();
    row.empirical.ecdf_ad.clear();
    row.empirical.ecdf_ad.shrink_to_fit();
    cmp.rows.push_back(std::move(row));
}

}  // namespace

Comparison compare_sweep(const ScenarioConfig& base, std::span<const std::size_t> sizes,
                         double distance, unsigned threads, std::size_t ecdf_points) {
    if (sizes.empty()) throw ParameterError("compare: the sensor-count sweep is empty");
    if (!(distance > 0.0) || !std::isfinite(distance)) {
        throw ParameterError("compare: characteristic distance must be positive");
    }
    Comparison cmp;
    cmp.ecdf_quantity = "a_d";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] == 0) throw ParameterError("compare: sensor counts must be at least 1");
        const double side = std::sqrt(static_cast<double>(sizes[i])) * distance;
        ScenarioConfig cfg = base;
        cfg.region = RectRegion(side, side);
        cfg.placement = RandomPlacement{sizes[i]};
        cfg.master_seed = base.master_seed + static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ULL;
        append_row(cmp, cfg, threads, ecdf_points);
    }
    return cmp;
}

Comparison compare_scenario(const ScenarioConfig& config, unsigned threads,
                            std::size_t ecdf_points) {
    Comparison cmp;
    cmp.ecdf_quantity = std::holds_alternative<GridPlacement>(config.placement) ? "t_d" : "a_d";
    append_row(cmp, config, threads, ecdf_points);
    return cmp;
}

namespace {

void put(std::ostream& os, const std::optional<double>& v) {
    if (v) os << *v;
}

}  // namespace

void write_rows_csv(std::ostream& os, const Comparison& cmp) {
    const auto old_precision = os.precision(12);
    os << "N,D,trials,mean_td,se_td,var_td,se_var_td,analytic_mean_td,analytic_var_td,"
          "mean_ad,se_ad,var_ad,se_var_ad,analytic_mean_ad,analytic_var_ad,ks_td,ks_ad\n";
    for (const ComparisonRow& r : cmp.rows) {
        const SummaryStats& e = r.empirical;
        os << r.sensors << ',' << r.distance << ',' << e.n << ',' << e.mean_td << ',' << e.se_td
           << ',' << e.var_td << ',' << e.se_var_td << ',';
        put(os, r.analytic_mean_td);
        os << ',';
        put(os, r.analytic_var_td);
        os << ',' << e.mean_ad << ',' << e.se_ad << ',' << e.var_ad << ',' << e.se_var_ad << ',';
        put(os, r.analytic_mean_ad);
        os << ',';
        put(os, r.analytic_var_ad);
        os << ',';
        put(os, r.ks_td);
        os << ',';
        put(os, r.ks_ad);
        os << '\n';
    }
    os.precision(old_precision);
}

void write_ecdf_csv(std::ostream& os, const Comparison& cmp) {
    const auto old_precision = os.precision(12);
    os << "N,quantity,x,empirical,exact,asymptotic\n";
    for (const EcdfPoint& p : cmp.ecdf) {
        os << p.sensors << ',' << cmp.ecdf_quantity << ',' << p.x << ',' << p.empirical << ',';
        put(os, p.exact);
        os << ',';
        put(os, p.asymptotic);
        os << '\n';
    }
    os.precision(old_precision);
}

std::string comparison_json(const Comparison& cmp) {
    using nlohmann::ordered_json;
    auto opt = [](const std::optional<double>& v) {
        return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    ordered_json rows = ordered_json::array();
    for (const ComparisonRow& r : cmp.rows) {
        const SummaryStats& e = r.empirical;
        rows.push_back({{"N", r.sensors},
                        {"D", r.distance},
                        {"trials", e.n},
                        {"mean_td", e.mean_td},
                        {"se_td", e.se_td},
                        {"var_td", e.var_td},
                        {"se_var_td", e.se_var_td},
                        {"analytic_mean_td", opt(r.analytic_mean_td)},
                        {"analytic_var_td", opt(r.analytic_var_td)},
                        {"mean_ad", e.mean_ad},
                        {"se_ad", e.se_ad},
                        {"var_ad", e.var_ad},
                        {"se_var_ad", e.se_var_ad},
                        {"analytic_mean_ad", opt(r.analytic_mean_ad)},
                        {"analytic_var_ad", opt(r.analytic_var_ad)},
                        {"ks_td", opt(r.ks_td)},
                        {"ks_ad", opt(r.ks_ad)}});
    }
    ordered_json ecdf = ordered_json::array();
    for (const EcdfPoint& p : cmp.ecdf) {
        ecdf.push_back({{"N", p.sensors},
                        {"x", p.x},
                        {"empirical", p.empirical},
                        {"exact", opt(p.exact)},
                        {"asymptotic", opt(p.asymptotic)}});
    }
    ordered_json j;
    j["quantity"] = cmp.ecdf_quantity;
    j["rows"] = std::move(rows);
    j["ecdf"] = std::move(ecdf);
    return j.dump(2);
}

}  // namespace wsnfire
