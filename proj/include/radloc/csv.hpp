#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "radloc/sim.hpp"

namespace radloc {

// Locale-independent "%.6g"-style formatting: 6 significant digits,
// '.' decimal separator.
std::string format_number(double value);

// One CSV table for a sweep. Header:
//   sweep_param,value,e_ca,e_rla,improvement_pct,localized_fraction,raw_e_ca,raw_e_rla
// Rows follow the order of `results`. improvement_pct is
// 100 * (e_ca - e_rla) / e_ca.
std::string sweep_csv(std::string_view param_name, const std::vector<ScenarioResult>& results);

} // namespace radloc
