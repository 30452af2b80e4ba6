#include "wsnfire/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "wsnfire/errors.hpp"
#include "wsnfire/random.hpp"

namespace wsnfire {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

bool resamples_layout(const ScenarioConfig& config) {
    const bool random = std::holds_alternative<RandomPlacement>(config.placement);
    return config.resample_layout_each_trial.value_or(random) && random;
}

bool clips_to_region(const ScenarioConfig& config) {
    return config.clip_to_region.value_or(
        std::holds_alternative<RandomPlacement>(config.placement));
}

std::size_t sensor_count(const ScenarioConfig& config) {
    return std::visit(
        overloaded{
            [&](const GridPlacement& g) {
                return grid_layout(config.region, g.spacing).positions.size();
            },
            [](const RandomPlacement& r) { return r.count; },
            [](const ExplicitPlacement& e) { return e.positions.size(); },
        },
        config.placement);
}

double characteristic_distance(const ScenarioConfig& config) {
    if (const auto* grid = std::get_if<GridPlacement>(&config.placement)) return grid->spacing;
    return characteristic_distance(config.region.area(), sensor_count(config));
}

void validate(const ScenarioConfig& config) {
    validate(config.model);
    if (config.ignition_count == 0) throw ParameterError("ignition count must be at least 1");
    if (config.trials == 0) throw ParameterError("trial count must be at least 1");
    if (!(config.area_tolerance > 0.0)) throw ParameterError("area tolerance must be positive");
    std::visit(overloaded{
                   [&](const GridPlacement& g) { (void)grid_layout(config.region, g.spacing); },
                   [](const RandomPlacement& r) {
                       if (r.count == 0) throw ParameterError("layout is empty: sensor count is 0");
                   },
                   [&](const ExplicitPlacement& e) {
                       if (e.positions.empty()) throw ParameterError("layout is empty");
                       for (const Point& p : e.positions) {
                           if (!contains(config.region, p)) {
                               throw ParameterError("explicit sensor outside the region");
                           }
                       }
                   },
               },
               config.placement);
}

TrialOutcome evaluate_trial(const SpreadModel& model, std::span<const Point> ignitions,
                            std::span<const Point> sensors, const RectRegion& region,
                            bool clip_to_region, double area_tolerance) {
    if (sensors.empty()) throw ParameterError("layout is empty");
    if (ignitions.empty()) throw ParameterError("at least one ignition is required");

    double t_d = std::numeric_limits<double>::infinity();
    if (const auto* circ = std::get_if<CircularModel>(&model)) {
        validate(model);
        double best = std::numeric_limits<double>::infinity();
        for (const Point& ign : ignitions) {
            for (const Point& s : sensors) {
                const double dx = s.x - ign.x;
                const double dy = s.y - ign.y;
                best = std::min(best, dx * dx + dy * dy);
            }
        }
        t_d = std::sqrt(best) / circ->rate;
    } else {
        const EllipseReachSolver solve(front_shape(model));
        for (const Point& ign : ignitions) {
            for (const Point& s : sensors) t_d = std::min(t_d, solve(ign, s));
        }
    }

    TrialOutcome out{t_d, 0.0};
    if (ignitions.size() == 1 && !clip_to_region) {
        out.a_d = burned_area(model, t_d);
    } else {
        const EllipseShape shape = front_shape(model);
        std::vector<Front> fronts;
        fronts.reserve(ignitions.size());
        for (const Point& ign : ignitions) fronts.push_back({ign, shape, t_d});
        out.a_d = burned_union_area(fronts, region, area_tolerance);
    }
    return out;
}

namespace {

struct TrialContext {
    const ScenarioConfig& config;
    bool resample;
    bool clip;
    std::size_t resample_count;
    std::vector<Point> fixed_sensors;
};

TrialContext make_context(const ScenarioConfig& config) {
    validate(config);
    TrialContext ctx{config, resamples_layout(config), clips_to_region(config), 0, {}};
    std::visit(overloaded{
                   [&](const GridPlacement& g) {
                       ctx.fixed_sensors = grid_layout(config.region, g.spacing).positions;
                   },
                   [&](const RandomPlacement& r) {
                       if (ctx.resample) {
                           ctx.resample_count = r.count;
                       } else {
                           ctx.fixed_sensors =
                               uniform_layout(config.region, r.count, config.master_seed).positions;
                       }
                   },
                   [&](const ExplicitPlacement& e) { ctx.fixed_sensors = e.positions; },
               },
               config.placement);
    return ctx;
}

// Per trial stream: ignitions first, then (when resampling) the sensors.
TrialOutcome run_one(const TrialContext& ctx, std::size_t index, std::vector<Point>& ignitions,
                     std::vector<Point>& sensors) {
    const ScenarioConfig& cfg = ctx.config;
    Engine engine = make_stream(cfg.master_seed, index, StreamKind::Trial);
    fill_uniform(cfg.region, cfg.ignition_count, engine, ignitions);
    if (ctx.resample) {
        fill_uniform(cfg.region, ctx.resample_count, engine, sensors);
        return evaluate_trial(cfg.model, ignitions, sensors, cfg.region, ctx.clip,
                              cfg.area_tolerance);
    }
    return evaluate_trial(cfg.model, ignitions, ctx.fixed_sensors, cfg.region, ctx.clip,
                          cfg.area_tolerance);
}

}  // namespace

TrialOutcome run_trial(const ScenarioConfig& config, std::size_t index) {
    const TrialContext ctx = make_context(config);
    std::vector<Point> ignitions;
    std::vector<Point> sensors;
    return run_one(ctx, index, ignitions, sensors);
}

std::vector<TrialOutcome> run_trials(const ScenarioConfig& config, unsigned threads) {
    const TrialContext ctx = make_context(config);
    std::vector<TrialOutcome> outcomes(config.trials);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.trials));

    constexpr std::size_t kBlock = 64;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::vector<Point> ignitions;
        std::vector<Point> sensors;
        for (;;) {
            const std::size_t begin = next.fetch_add(kBlock);
            if (begin >= outcomes.size()) return;
            const std::size_t end = std::min(begin + kBlock, outcomes.size());
            for (std::size_t i = begin; i < end; ++i) {
                outcomes[i] = run_one(ctx, i, ignitions, sensors);
            }
        }
    };

    if (threads <= 1) {
        worker();
        return outcomes;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    return outcomes;
}

namespace {

struct Moments {
    double mean;
    double var;
    double se;
    double se_var;
};

Moments sample_moments(std::span<const double> xs) {
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / n;
    double m2 = 0.0;
    double m4 = 0.0;
    for (double x : xs) {
        const double d = (x - mean) * (x - mean);
        m2 += d;
        m4 += d * d;
    }
    const double var = m2 / (n - 1.0);
    const double central2 = m2 / n;
    const double central4 = m4 / n;
    return {mean, var, std::sqrt(var / n),
            std::sqrt(std::max(0.0, central4 - central2 * central2) / n)};
}

}  // namespace

SummaryStats summarize(std::span<const TrialOutcome> outcomes) {
    if (outcomes.size() < 2) throw EstimatorError("summarize needs at least 2 outcomes");
    SummaryStats s;
    s.n = outcomes.size();
    s.ecdf_td.reserve(s.n);
    s.ecdf_ad.reserve(s.n);
    for (const TrialOutcome& o : outcomes) {
        s.ecdf_td.push_back(o.t_d);
        s.ecdf_ad.push_back(o.a_d);
    }
    const Moments td = sample_moments(s.ecdf_td);
    const Moments ad = sample_moments(s.ecdf_ad);
    s.mean_td = td.mean;
    s.var_td = td.var;
    s.se_td = td.se;
    s.se_var_td = td.se_var;
    s.mean_ad = ad.mean;
    s.var_ad = ad.var;
    s.se_ad = ad.se;
    s.se_var_ad = ad.se_var;
    std::sort(s.ecdf_td.begin(), s.ecdf_td.end());
    std::sort(s.ecdf_ad.begin(), s.ecdf_ad.end());
    return s;
}

double ks_distance(std::span<const double> sorted_sample, const AnalyticLaw& law) {
    if (sorted_sample.empty()) throw EstimatorError("ks_distance needs a non-empty sample");
    if (!std::is_sorted(sorted_sample.begin(), sorted_sample.end())) {
        throw EstimatorError("ks_distance needs a sample sorted ascending");
    }
    const double n = static_cast<double>(sorted_sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
        const double f = law.cdf(sorted_sample[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

double ks_critical_value(std::size_t n, double alpha) {
    if (n == 0) throw EstimatorError("ks_critical_value needs n >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
    return std::sqrt(-0.5 * std::log(0.5 * alpha)) / std::sqrt(static_cast<double>(n));
}

ReferenceLaws reference_laws(const ScenarioConfig& config) {
    ReferenceLaws laws;
    const bool single = config.ignition_count == 1;
    const bool clip = clips_to_region(config);
    if (const auto* grid = std::get_if<GridPlacement>(&config.placement)) {
        if (std::holds_alternative<CircularModel>(config.model) && single) {
            laws.td = grid_td_law(grid->spacing, rate_of_spread(config.model));
            if (!clip) laws.ad = grid_ad_law(grid->spacing);
        }
    } else if (const auto* random = std::get_if<RandomPlacement>(&config.placement)) {
        const double d = characteristic_distance(config);
        if (single) laws.td = random_td_law(config.model, d);
        if (clip && resamples_layout(config)) {
            laws.ad = random_ad_exact_law(config.region.area(), random->count);
        } else if (single) {
            laws.ad = random_ad_limit_law(d);
        }
    }
    return laws;
}

void write_outcomes_csv(std::ostream& os, std::span<const TrialOutcome> outcomes) {
    const auto old_precision = os.precision(17);
    os << "trial,t_d,a_d\n";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        os << i << ',' << outcomes[i].t_d << ',' << outcomes[i].a_d << '\n';
    }
    os.precision(old_precision);
}

std::string summary_json(const SummaryStats& stats, std::optional<double> ks_td,
                         std::optional<double> ks_ad) {
    nlohmann::ordered_json j;
    j["n"] = stats.n;
    j["mean_td"] = stats.mean_td;
    j["se_td"] = stats.se_td;
    j["var_td"] = stats.var_td;
    j["mean_ad"] = stats.mean_ad;
    j["se_ad"] = stats.se_ad;
    j["var_ad"] = stats.var_ad;
    j["ks_td"] = ks_td ? nlohmann::ordered_json(*ks_td) : nlohmann::ordered_json(nullptr);
    j["ks_ad"] = ks_ad ? nlohmann::ordered_json(*ks_ad) : nlohmann::ordered_json(nullptr);
    return j.dump(2);
}

}  // namespace wsnfire
