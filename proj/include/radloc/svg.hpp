#pragma once

#include <string>

#include "radloc/sim.hpp"

namespace radloc {

// Renders one trial as SVG 1.1: two side-by-side panels (RLA left, CA right),
// anchors as triangles, true sensor positions as dots, estimates as crosses,
// and a dashed segment joining each localized sensor to its estimate
// (omitted when the estimate coincides with the truth). Each panel's label
// and the document title carry that trial's normalized error.
std::string snapshot_svg(const Deployment& deployment, const TrialResult& trial,
                         const ScenarioConfig& cfg);

// Per-trial normalized error for one method: mean over localized sensors of
// the truth-to-estimate distance, divided by r_max. Zero when nothing was
// localized.
double trial_error(const TrialResult& trial, double r_max, Method method);

} // namespace radloc
