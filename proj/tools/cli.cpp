#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wsnfire/analytic.hpp"
#include "wsnfire/comparison.hpp"
#include "wsnfire/errors.hpp"
#include "wsnfire/montecarlo.hpp"
#include "wsnfire/placement.hpp"
#include "wsnfire/planning.hpp"

namespace wsnfire::cli {

namespace {

using nlohmann::json;

/// Spread-model flags shared by every subcommand.
struct ModelFlags {
    std::optional<std::string> model;
    std::optional<double> rate;
    std::optional<double> hb;
    std::optional<double> lb;
    std::optional<double> heading;

    void add_to(CLI::App* app) {
        app->add_option("--model", model, "Spread model")
            ->check(CLI::IsMember({"circular", "elliptical"}));
        app->add_option("--rate", rate, "Rate of spread at the head (m/s)");
        app->add_option("--hb", hb, "Head-to-back ratio (elliptical)");
        app->add_option("--lb", lb, "Length-to-breadth ratio (elliptical)");
        app->add_option("--heading", heading, "Head direction in radians (elliptical)");
    }

    SpreadModel build() const {
        const double r = rate.value_or(1.0);
        if (model.value_or("circular") == "circular") {
            if (hb || lb || heading) {
                throw ParameterError("--hb, --lb and --heading require --model elliptical");
            }
            return CircularModel{r};
        }
        return EllipticalModel{r, hb.value_or(1.0), lb.value_or(1.0), heading.value_or(0.0)};
    }
};

/// Scenario flags for `simulate` and `compare`, optionally seeded from a
/// JSON config file whose keys match the long flag names.
struct ScenarioFlags {
    std::string config_path;
    std::optional<std::string> region;
    ModelFlags model;
    std::optional<std::size_t> sensors;
    std::optional<double> spacing;
    std::optional<std::size_t> ignitions;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<double> tolerance;
    std::optional<bool> clip;
    std::optional<bool> resample;
    unsigned threads = 0;
    std::string out;
    std::string format = "csv";

    CLI::Option* clip_opt = nullptr;
    CLI::Option* resample_opt = nullptr;
    bool clip_flag = false;
    bool resample_flag = false;

    void add_to(CLI::App* app) {
        app->add_option("--config", config_path, "JSON scenario file; flags override it");
        app->add_option("--region", region, "Protected region as WxH in meters");
        model.add_to(app);
        auto* s = app->add_option("--sensors", sensors, "Random placement with N sensors");
        auto* g = app->add_option("--spacing", spacing, "Grid placement with spacing D (m)");
        s->excludes(g);
        app->add_option("--ignitions", ignitions, "Ignition points per trial");
        app->add_option("--trials", trials, "Monte Carlo trials");
        app->add_option("--seed", seed, "Master seed");
        app->add_option("--tolerance", tolerance, "Relative tolerance of clipped burned areas");
        clip_opt = app->add_flag("--clip,!--no-clip", clip_flag,
                                 "Measure burned area inside the region only");
        resample_opt = app->add_flag("--resample,!--no-resample", resample_flag,
                                     "Draw a fresh random layout every trial");
        app->add_option("--threads", threads, "Worker threads (0 = all cores)");
        app->add_option("--out", out, "Output file (default stdout)");
        app->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
    }

    void merge_config_file() {
        if (clip_opt->count() > 0) clip = clip_flag;
        if (resample_opt->count() > 0) resample = resample_flag;
        if (config_path.empty()) return;

        std::ifstream in(config_path);
        if (!in) throw ParameterError("cannot open config file " + config_path);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw ParameterError("config file " + config_path + ": " + e.what());
        }
        if (!j.is_object()) throw ParameterError("config file must hold a JSON object");
        try {
            for (const auto& [key, value] : j.items()) {
                if (key == "region") {
                    if (!region) region = value.get<std::string>();
                } else if (key == "model") {
                    if (!model.model) model.model = value.get<std::string>();
                } else if (key == "rate") {
                    if (!model.rate) model.rate = value.get<double>();
                } else if (key == "hb") {
                    if (!model.hb) model.hb = value.get<double>();
                } else if (key == "lb") {
                    if (!model.lb) model.lb = value.get<double>();
                } else if (key == "heading") {
                    if (!model.heading) model.heading = value.get<double>();
                } else if (key == "sensors") {
                    if (!sensors && !spacing) sensors = value.get<std::size_t>();
                } else if (key == "spacing") {
                    if (!spacing && !sensors) spacing = value.get<double>();
                } else if (key == "ignitions") {
                    if (!ignitions) ignitions = value.get<std::size_t>();
                } else if (key == "trials") {
                    if (!trials) trials = value.get<std::size_t>();
                } else if (key == "seed") {
                    if (!seed) seed = value.get<std::uint64_t>();
                } else if (key == "tolerance") {
                    if (!tolerance) tolerance = value.get<double>();
                } else if (key == "clip") {
                    if (!clip) clip = value.get<bool>();
                } else if (key == "resample") {
                    if (!resample) resample = value.get<bool>();
                } else {
                    throw ParameterError("unknown config key '" + key + "'");
                }
            }
        } catch (const json::exception& e) {
            throw ParameterError("config file " + config_path + ": " + e.what());
        }
        if (model.model && *model.model != "circular" && *model.model != "elliptical") {
            throw ParameterError("model must be circular or elliptical");
        }
    }

    /// Everything except region and placement, which `compare --sweep` sets.
    ScenarioConfig base_config() const {
        ScenarioConfig cfg;
        cfg.model = model.build();
        cfg.ignition_count = ignitions.value_or(1);
        cfg.trials = trials.value_or(1000);
        cfg.master_seed = seed.value_or(0);
        cfg.clip_to_region = clip;
        cfg.resample_layout_each_trial = resample;
        cfg.area_tolerance = tolerance.value_or(1e-3);
        return cfg;
    }

    ScenarioConfig full_config() const;
};

RectRegion parse_region(const std::string& text) {
    const auto sep = text.find_first_of("xX");
    if (sep == std::string::npos) throw ParameterError("region must look like WxH, got " + text);
    try {
        std::size_t used_w = 0;
        std::size_t used_h = 0;
        const std::string w = text.substr(0, sep);
        const std::string h = text.substr(sep + 1);
        const double width = std::stod(w, &used_w);
        const double height = std::stod(h, &used_h);
        if (used_w != w.size() || used_h != h.size()) throw std::invalid_argument(text);
        return RectRegion(width, height);
    } catch (const std::logic_error&) {
        // ParameterError is itself a logic_error; keep its message.
        throw ParameterError("region must look like WxH with positive sides, got " + text);
    }
}

ScenarioConfig ScenarioFlags::full_config() const {
    ScenarioConfig cfg = base_config();
    if (!region) throw ParameterError("--region is required");
    cfg.region = parse_region(*region);
    if (sensors) {
        cfg.placement = RandomPlacement{*sensors};
    } else if (spacing) {
        cfg.placement = GridPlacement{*spacing};
    } else {
        throw ParameterError("one of --sensors or --spacing is required");
    }
    validate(cfg);
    return cfg;
}

/// Writes to --out when given, else to the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw ParameterError("cannot open output file " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

int cmd_simulate(const ScenarioFlags& f, const std::string& summary_path, std::ostream& out) {
    const ScenarioConfig cfg = f.full_config();
    const std::vector<TrialOutcome> outcomes = run_trials(cfg, f.threads);

    auto summary = [&] {
        const SummaryStats stats = summarize(outcomes);
        const ReferenceLaws laws = reference_laws(cfg);
        std::optional<double> ks_td;
        std::optional<double> ks_ad;
        if (laws.td) ks_td = ks_distance(stats.ecdf_td, *laws.td);
        if (laws.ad) ks_ad = ks_distance(stats.ecdf_ad, *laws.ad);
        return summary_json(stats, ks_td, ks_ad);
    };

    Sink sink(f.out, out);
    if (f.format == "csv") {
        write_outcomes_csv(sink.get(), outcomes);
    } else {
        sink.get() << summary() << '\n';
    }
    if (!summary_path.empty()) {
        Sink s(summary_path, out);
        s.get() << summary() << '\n';
    }
    return kExitOk;
}

std::vector<std::size_t> parse_sweep(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(item, &used);
            if (used != item.size() || v == 0) throw std::invalid_argument(item);
            sizes.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            throw ParameterError("--sweep expects positive integers, got '" + item + "'");
        }
    }
    if (sizes.empty()) throw ParameterError("--sweep is empty");
    return sizes;
}

int cmd_compare(const ScenarioFlags& f, const std::string& sweep, double distance,
                const std::string& ecdf_path, std::size_t ecdf_points, std::ostream& out) {
    Comparison cmp;
    if (!sweep.empty()) {
        if (f.spacing) throw ParameterError("--sweep uses random placement; drop --spacing");
        const std::vector<std::size_t> sizes = parse_sweep(sweep);
        cmp = compare_sweep(f.base_config(), sizes, distance, f.threads, ecdf_points);
    } else {
        cmp = compare_scenario(f.full_config(), f.threads, ecdf_points);
    }

    Sink sink(f.out, out);
    if (f.format == "json") {
        sink.get() << comparison_json(cmp) << '\n';
    } else {
        write_rows_csv(sink.get(), cmp);
    }
    if (!ecdf_path.empty()) {
        Sink e(ecdf_path, out);
        write_ecdf_csv(e.get(), cmp);
    }
    return kExitOk;
}

struct AnalyticFlags {
    std::string law;
    std::vector<double> at;
    ModelFlags model;
    std::optional<double> spacing;
    std::optional<double> distance;
    std::optional<double> area;
    std::optional<std::size_t> sensors;
    bool clamp = false;
    std::string format = "csv";
    std::string out;

    double resolve_distance() const {
        if (distance) return *distance;
        if (area && sensors) return characteristic_distance(*area, *sensors);
        throw ParameterError("--distance (or --area with --sensors) is required");
    }
};

int cmd_analytic(const AnalyticFlags& f, std::ostream& out) {
    Sink sink(f.out, out);
    std::ostream& os = sink.get();
    os.precision(17);

    auto emit_moments = [&](const std::vector<std::pair<std::string, double>>& kv) {
        if (f.format == "json") {
            nlohmann::ordered_json j;
            for (const auto& [k, v] : kv) j[k] = v;
            os << j.dump(2) << '\n';
        } else {
            os << "quantity,value\n";
            for (const auto& [k, v] : kv) os << k << ',' << v << '\n';
        }
    };
    auto emit_curve = [&](const std::vector<std::string>& names, auto&& eval) {
        if (f.at.empty()) throw ParameterError("--at is required for law " + f.law);
        if (f.format == "json") {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (double x : f.at) {
                const std::vector<double> v = eval(x);
                nlohmann::ordered_json row;
                row["x"] = x;
                for (std::size_t i = 0; i < names.size(); ++i) row[names[i]] = v[i];
                rows.push_back(row);
            }
            os << rows.dump(2) << '\n';
        } else {
            os << 'x';
            for (const auto& n : names) os << ',' << n;
            os << '\n';
            for (double x : f.at) {
                os << x;
                for (double v : eval(x)) os << ',' << v;
                os << '\n';
            }
        }
    };

    const double rate = f.model.rate.value_or(1.0);
    if (f.law == "grid-td") {
        if (!f.spacing) throw ParameterError("--spacing is required for grid laws");
        emit_curve({"cdf", "survival"}, [&](double x) {
            const double c = grid_td_cdf(x, *f.spacing, rate);
            return std::vector<double>{c, 1.0 - c};
        });
    } else if (f.law == "grid-moments") {
        if (!f.spacing) throw ParameterError("--spacing is required for grid laws");
        const GridMoments m = grid_moments(*f.spacing, rate);
        emit_moments({{"mean_td", m.mean_td},
                      {"second_moment_td", m.second_moment_td},
                      {"var_td", m.var_td},
                      {"mean_ad", m.mean_ad}});
    } else if (f.law == "ad-exact") {
        if (!f.area || !f.sensors) throw ParameterError("--area and --sensors are required");
        const RangeMode mode = f.clamp ? RangeMode::Clamp : RangeMode::Strict;
        emit_curve({"survival"}, [&](double x) {
            return std::vector<double>{random_ad_survival_exact(x, *f.area, *f.sensors, mode)};
        });
    } else if (f.law == "ad-limit") {
        const double d = f.resolve_distance();
        emit_curve({"survival"},
                   [&](double x) { return std::vector<double>{random_ad_survival_limit(x, d)}; });
    } else if (f.law == "td-random") {
        const double d = f.resolve_distance();
        const SpreadModel model = f.model.build();
        emit_curve({"survival"}, [&](double t) {
            return std::vector<double>{random_td_survival(t, model, d)};
        });
    } else if (f.law == "td-moments") {
        const TdMoments m = random_td_moments(f.model.build(), f.resolve_distance());
        emit_moments({{"mean_td", m.mean_td},
                      {"second_moment_td", m.second_moment_td},
                      {"var_td", m.var_td}});
    }
    return kExitOk;
}

struct PlanFlags {
    std::optional<double> area;
    std::optional<std::string> region;
    std::string layout_out;
    std::uint64_t seed = 0;
    std::optional<double> target_area;
    std::optional<double> target_time;
    std::string placement = "random";
    ModelFlags model;
    std::string out;
};

int cmd_plan(const PlanFlags& f, std::ostream& out) {
    std::optional<RectRegion> region;
    if (f.region) region = parse_region(*f.region);
    if (!f.layout_out.empty() && !region) throw ParameterError("--layout-out requires --region");
    if (f.area && region && std::abs(*f.area - region->area()) > 1e-9 * region->area()) {
        throw ParameterError("--area disagrees with --region");
    }
    if (!f.area && !region) throw ParameterError("one of --area or --region is required");

    PlanRequest req;
    req.region_area = f.area ? *f.area : region->area();
    req.model = f.model.build();
    req.placement = f.placement == "grid" ? PlacementKind::Grid : PlacementKind::Random;
    if (f.target_area) {
        req.target = AreaTarget{*f.target_area};
    } else if (f.target_time) {
        req.target = TimeTarget{*f.target_time};
    } else {
        throw ParameterError("one of --target-area or --target-time is required");
    }
    const PlanResult result = plan(req);
    if (!f.layout_out.empty()) {
        const SensorLayout layout = req.placement == PlacementKind::Grid
                                        ? covering_grid_layout(*region, result.distance)
                                        : uniform_layout(*region, result.count, f.seed);
        Sink layout_sink(f.layout_out, out);
        write_layout_csv(layout_sink.get(), layout);
    }
    Sink sink(f.out, out);
    sink.get() << plan_json(result) << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Detection time and burned area of wildfire sensor networks", "wsnfire"};
    app.require_subcommand(1);

    ScenarioFlags sim;
    std::string summary_path;
    auto* simulate = app.add_subcommand("simulate", "Run Monte Carlo trials");
    sim.add_to(simulate);
    simulate->add_option("--summary", summary_path, "Also write the JSON summary to this file");

    ScenarioFlags cmp;
    std::string sweep;
    double sweep_distance = 1.0;
    std::string ecdf_path;
    std::size_t ecdf_points = 41;
    auto* compare = app.add_subcommand("compare", "Empirical versus closed-form statistics");
    cmp.add_to(compare);
    compare->add_option("--sweep", sweep, "Comma-separated sensor counts (random placement)");
    compare->add_option("--distance", sweep_distance, "Characteristic distance of the sweep (m)");
    compare->add_option("--ecdf-out", ecdf_path, "Write the ECDF table (CSV) to this file");
    compare->add_option("--ecdf-points", ecdf_points, "ECDF abscissae per row");

    AnalyticFlags ana;
    auto* analytic = app.add_subcommand("analytic", "Evaluate closed-form laws");
    analytic->add_option("--law", ana.law, "Law to evaluate")
        ->required()
        ->check(CLI::IsMember(
            {"grid-td", "grid-moments", "ad-exact", "ad-limit", "td-random", "td-moments"}));
    analytic->add_option("--at", ana.at, "Evaluation points (comma separated)")->delimiter(',');
    ana.model.add_to(analytic);
    analytic->add_option("--spacing", ana.spacing, "Grid spacing D (m)");
    analytic->add_option("--distance", ana.distance, "Characteristic distance D (m)");
    analytic->add_option("--area", ana.area, "Protected area A (m^2)");
    analytic->add_option("--sensors", ana.sensors, "Sensor count N");
    analytic->add_flag("--clamp", ana.clamp, "Clamp out-of-range areas instead of failing");
    analytic->add_option("--format", ana.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    analytic->add_option("--out", ana.out, "Output file (default stdout)");

    PlanFlags pl;
    auto* planner = app.add_subcommand("plan", "Sensor density for a target mean");
    planner->add_option("--area", pl.area, "Protected area A (m^2)");
    planner->add_option("--region", pl.region, "Protected region as WxH (sets the area)");
    planner->add_option("--layout-out", pl.layout_out,
                        "Write a layout at the planned density (CSV x,y); needs --region");
    planner->add_option("--seed", pl.seed, "Seed for a random layout");
    auto* ta = planner->add_option("--target-area", pl.target_area,
                                   "Largest expected burned area at detection (m^2)");
    auto* tt = planner->add_option("--target-time", pl.target_time,
                                   "Largest expected time to detection (s)");
    ta->excludes(tt);
    planner->add_option("--placement", pl.placement, "Placement kind")
        ->check(CLI::IsMember({"grid", "random"}));
    pl.model.add_to(planner);
    planner->add_option("--out", pl.out, "Output file (default stdout)");
    std::string plan_format = "json";
    planner->add_option("--format", plan_format, "Output format (JSON only)")
        ->check(CLI::IsMember({"json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*simulate) {
            sim.merge_config_file();
            return cmd_simulate(sim, summary_path, out);
        }
        if (*compare) {
            cmp.merge_config_file();
            return cmd_compare(cmp, sweep, sweep_distance, ecdf_path, ecdf_points, out);
        }
        if (*analytic) return cmd_analytic(ana, out);
        if (*planner) return cmd_plan(pl, out);
    } catch (const ParameterError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const EstimatorError& e) {
        err << "estimator error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitConfig;
}

}  // namespace wsnfire::cli
