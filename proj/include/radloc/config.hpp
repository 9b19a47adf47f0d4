#pragma once

#include <string>
#include <string_view>

#include "radloc/sim.hpp"

namespace radloc {

// Parses a strict JSON config: keys are the ScenarioConfig field names in
// snake_case, every key optional, unknown keys rejected. Throws
// ValidationError (naming the offending field) on malformed input or
// out-of-range values.
ScenarioConfig parse_config(std::string_view json_text);

// Applies one `key=value` override on top of an existing config; the value is
// parsed as a JSON scalar. Same validation as parse_config.
void apply_override(ScenarioConfig& cfg, std::string_view key, std::string_view value);

// Range checks shared by parse_config and apply_override.
void validate_config(const ScenarioConfig& cfg);

} // namespace radloc
