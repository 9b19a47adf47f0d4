#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radloc/locate.hpp"

namespace radloc {

struct ScenarioConfig {
    double field_width = 100.0;  // meters
    double field_height = 100.0; // meters
    int num_sensors = 100;
    int num_anchors = 30;
    double r_max = 45.0;       // meters
    bool mixed_ranges = false; // half the anchors at r_max, half at r_max/2
    double doi = 0.0;          // degree of irregularity, in [0, 1)
    int num_trials = 100;
    int test_points = 4; // L, samples per radical segment
    std::uint64_t master_seed = 42;
};

struct Anchor {
    Point position;
    double nominal_range = 0.0;
};

struct Deployment {
    std::vector<Anchor> anchors;
    std::vector<Point> sensors;
    int trial_index = 0;
};

struct SensorRecord {
    Point true_position;
    int n_contacts = 0;
    std::optional<Estimate> ca;  // empty exactly when n_contacts == 0
    std::optional<Estimate> rla; // empty exactly when n_contacts == 0
};

struct TrialResult {
    std::vector<SensorRecord> sensors;
    int localized_count = 0; // sensors with n_contacts >= 1
};

// Aggregated error, normalized by r_max. The e_* values average per-trial
// means over localized sensors only; the raw_* values divide each trial's
// error sum by the full sensor count instead, which understates the error
// when coverage is incomplete but matches a fixed-divisor convention.
struct ErrorSummary {
    double e_ca = 0.0;
    double e_rla = 0.0;
    double localized_fraction = 0.0;
    double raw_e_ca = 0.0;
    double raw_e_rla = 0.0;
};

enum class SweepParam {
    NumAnchors,
    NumSensors,
};

struct ScenarioResult {
    int sweep_value = 0;
    ErrorSummary errors;
    std::vector<double> trial_e_ca;  // per-trial mean over localized sensors / r_max
    std::vector<double> trial_e_rla; // (NaN-free: trials with no localized sensor are skipped)
};

// Anchors and sensors placed i.i.d. uniform over the field from a
// deterministic substream of (master_seed, trial_index, num_anchors,
// num_sensors). Draw order: anchor x,y pairs in index order, then sensor x,y
// pairs. With mixed_ranges the first ceil(NA/2) anchors get r_max, the rest
// r_max/2; otherwise all get r_max.
Deployment generate_deployment(const ScenarioConfig& cfg, int trial_index);

// Anchors whose DOI-shrunken effective range reaches the sensor, in
// deployment order. The returned circles carry that same effective range
// (the de-rated working radius), keeping the range constraints consistent
// with the contact condition: the centroid estimator ignores radii entirely,
// and the radical-line estimator degrades towards it when its circles
// overstate the true coverage. May be empty.
AnchorSet contacts(Point sensor, const Deployment& deployment, double doi);

// Runs both estimators for every sensor of an existing deployment.
TrialResult evaluate_deployment(const Deployment& deployment, const ScenarioConfig& cfg);

// generate_deployment + evaluate_deployment.
TrialResult run_trial(const ScenarioConfig& cfg, int trial_index);

// Aggregates trials into the normalized error summary. Trials where no sensor
// was localized are skipped in the e_* averages; throws MetricUndefinedError
// when that leaves nothing to average.
ErrorSummary error_metric(const std::vector<TrialResult>& trials, double r_max);

// Runs cfg.num_trials trials for each sweep value and aggregates. Trials are
// independent; with threads > 1 they run on a worker pool, and results are
// identical to a serial run because every trial seeds its own substream and
// aggregation happens in trial-index order.
std::vector<ScenarioResult> run_scenario(const ScenarioConfig& cfg, SweepParam param,
                                         const std::vector<int>& values, unsigned threads = 1);

} // namespace radloc
