#include "radloc/sim.hpp"

#include <atomic>
#include <thread>

#include "radloc/errors.hpp"
#include "radloc/rng.hpp"

namespace radloc {

Deployment generate_deployment(const ScenarioConfig& cfg, int trial_index) {
    SplitMix64 rng(derive_stream_seed(cfg.master_seed, static_cast<std::uint64_t>(trial_index),
                                      static_cast<std::uint64_t>(cfg.num_anchors),
                                      static_cast<std::uint64_t>(cfg.num_sensors)));
    Deployment dep;
    dep.trial_index = trial_index;

    const int full_range_count = (cfg.num_anchors + 1) / 2; // ceil(NA/2)
    dep.anchors.reserve(static_cast<std::size_t>(cfg.num_anchors));
    for (int i = 0; i < cfg.num_anchors; ++i) {
        Anchor a;
        a.position.x = rng.uniform(0.0, cfg.field_width);
        a.position.y = rng.uniform(0.0, cfg.field_height);
        a.nominal_range = (cfg.mixed_ranges && i >= full_range_count) ? 0.5 * cfg.r_max : cfg.r_max;
        dep.anchors.push_back(a);
    }

    dep.sensors.reserve(static_cast<std::size_t>(cfg.num_sensors));
    for (int i = 0; i < cfg.num_sensors; ++i) {
        dep.sensors.push_back({rng.uniform(0.0, cfg.field_width), rng.uniform(0.0, cfg.field_height)});
    }
    return dep;
}

AnchorSet contacts(Point sensor, const Deployment& deployment, double doi) {
    AnchorSet set;
    for (const Anchor& a : deployment.anchors) {
        const double effective_range = a.nominal_range * (1.0 - doi);
        if (distance(sensor, a.position) <= effective_range) {
            set.push_back(Circle{a.position, effective_range});
        }
    }
    return set;
}

TrialResult evaluate_deployment(const Deployment& deployment, const ScenarioConfig& cfg) {
    TrialResult result;
    result.sensors.reserve(deployment.sensors.size());
    for (const Point& sensor : deployment.sensors) {
        SensorRecord rec;
        rec.true_position = sensor;
        const AnchorSet set = contacts(sensor, deployment, cfg.doi);
        rec.n_contacts = static_cast<int>(set.size());
        if (!set.empty()) {
            rec.ca = centroid_estimate(set);
            rec.rla = rla_estimate(set, cfg.test_points);
            ++result.localized_count;
        }
        result.sensors.push_back(std::move(rec));
    }
    return result;
}

TrialResult run_trial(const ScenarioConfig& cfg, int trial_index) {
    return evaluate_deployment(generate_deployment(cfg, trial_index), cfg);
}

ErrorSummary error_metric(const std::vector<TrialResult>& trials, double r_max) {
    if (trials.empty()) {
        throw PreconditionError("error_metric: no trials");
    }
    ErrorSummary out;
    double sum_mean_ca = 0.0;
    double sum_mean_rla = 0.0;
    double sum_raw_ca = 0.0;
    double sum_raw_rla = 0.0;
    double sum_localized_frac = 0.0;
    int trials_with_coverage = 0;

    for (const TrialResult& trial : trials) {
        double err_ca = 0.0;
        double err_rla = 0.0;
        for (const SensorRecord& rec : trial.sensors) {
            if (rec.n_contacts == 0) {
                continue;
            }
            err_ca += distance(rec.true_position, rec.ca->point);
            err_rla += distance(rec.true_position, rec.rla->point);
        }
        const double n_sensors = static_cast<double>(trial.sensors.size());
        sum_raw_ca += err_ca / n_sensors;
        sum_raw_rla += err_rla / n_sensors;
        sum_localized_frac += static_cast<double>(trial.localized_count) / n_sensors;
        if (trial.localized_count > 0) {
            sum_mean_ca += err_ca / static_cast<double>(trial.localized_count);
            sum_mean_rla += err_rla / static_cast<double>(trial.localized_count);
            ++trials_with_coverage;
        }
    }

    if (trials_with_coverage == 0) {
        throw MetricUndefinedError("error_metric: no localized sensor in any trial");
    }
    const double n_trials = static_cast<double>(trials.size());
    out.e_ca = sum_mean_ca / static_cast<double>(trials_with_coverage) / r_max;
    out.e_rla = sum_mean_rla / static_cast<double>(trials_with_coverage) / r_max;
    out.localized_fraction = sum_localized_frac / n_trials;
    out.raw_e_ca = sum_raw_ca / n_trials / r_max;
    out.raw_e_rla = sum_raw_rla / n_trials / r_max;
    return out;
}

namespace {

std::vector<TrialResult> run_trials(const ScenarioConfig& cfg, unsigned threads) {
    std::vector<TrialResult> trials(static_cast<std::size_t>(cfg.num_trials));
    const unsigned workers =
        std::min<unsigned>(threads, static_cast<unsigned>(cfg.num_trials));
    if (workers <= 1) {
        for (int t = 0; t < cfg.num_trials; ++t) {
            trials[static_cast<std::size_t>(t)] = run_trial(cfg, t);
        }
        return trials;
    }
    // Each trial writes its own slot; any claim order yields the same vector.
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int t = next.fetch_add(1); t < cfg.num_trials; t = next.fetch_add(1)) {
                trials[static_cast<std::size_t>(t)] = run_trial(cfg, t);
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
    return trials;
}

} // namespace

std::vector<ScenarioResult> run_scenario(const ScenarioConfig& cfg, SweepParam param,
                                         const std::vector<int>& values, unsigned threads) {
    std::vector<ScenarioResult> results;
    results.reserve(values.size());
    for (int value : values) {
        ScenarioConfig point_cfg = cfg;
        if (param == SweepParam::NumAnchors) {
            point_cfg.num_anchors = value;
        } else {
            point_cfg.num_sensors = value;
        }
        const std::vector<TrialResult> trials = run_trials(point_cfg, threads);

        ScenarioResult res;
        res.sweep_value = value;
        res.errors = error_metric(trials, point_cfg.r_max);
        for (const TrialResult& trial : trials) {
            if (trial.localized_count == 0) {
                continue;
            }
            double err_ca = 0.0;
            double err_rla = 0.0;
            for (const SensorRecord& rec : trial.sensors) {
                if (rec.n_contacts == 0) {
                    continue;
                }
                err_ca += distance(rec.true_position, rec.ca->point);
                err_rla += distance(rec.true_position, rec.rla->point);
            }
            const double localized = static_cast<double>(trial.localized_count);
            res.trial_e_ca.push_back(err_ca / localized / point_cfg.r_max);
            res.trial_e_rla.push_back(err_rla / localized / point_cfg.r_max);
        }
        results.push_back(std::move(res));
    }
    return results;
}

} // namespace radloc
