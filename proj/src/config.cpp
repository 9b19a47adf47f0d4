#include "radloc/config.hpp"

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "radloc/errors.hpp"

namespace radloc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ValidationError(field, "config field '" + field + "': " + why);
}

double get_number(const json& value, const std::string& field) {
    if (!value.is_number()) {
        fail(field, "expected a number");
    }
    return value.get<double>();
}

int get_count(const json& value, const std::string& field) {
    if (!value.is_number_integer()) {
        fail(field, "expected an integer");
    }
    if (value.is_number_unsigned()) {
        if (value.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
            fail(field, "out of range");
        }
    } else {
        const auto v = value.get<std::int64_t>();
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
            fail(field, "out of range");
        }
    }
    return value.get<int>();
}

void assign_field(ScenarioConfig& cfg, const std::string& key, const json& value) {
    if (key == "field_width") {
        cfg.field_width = get_number(value, key);
    } else if (key == "field_height") {
        cfg.field_height = get_number(value, key);
    } else if (key == "num_sensors") {
        cfg.num_sensors = get_count(value, key);
    } else if (key == "num_anchors") {
        cfg.num_anchors = get_count(value, key);
    } else if (key == "r_max") {
        cfg.r_max = get_number(value, key);
    } else if (key == "mixed_ranges") {
        if (!value.is_boolean()) {
            fail(key, "expected true or false");
        }
        cfg.mixed_ranges = value.get<bool>();
    } else if (key == "doi") {
        cfg.doi = get_number(value, key);
    } else if (key == "num_trials") {
        cfg.num_trials = get_count(value, key);
    } else if (key == "test_points") {
        cfg.test_points = get_count(value, key);
    } else if (key == "master_seed") {
        if (value.is_number_unsigned()) {
            cfg.master_seed = value.get<std::uint64_t>();
        } else if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
            cfg.master_seed = static_cast<std::uint64_t>(value.get<std::int64_t>());
        } else {
            fail(key, "expected a non-negative 64-bit integer");
        }
    } else {
        fail(key, "unknown key");
    }
}

} // namespace

void validate_config(const ScenarioConfig& cfg) {
    if (!(cfg.field_width > 0.0)) {
        fail("field_width", "must be > 0");
    }
    if (!(cfg.field_height > 0.0)) {
        fail("field_height", "must be > 0");
    }
    if (cfg.num_sensors < 1) {
        fail("num_sensors", "must be >= 1");
    }
    if (cfg.num_anchors < 1) {
        fail("num_anchors", "must be >= 1");
    }
    if (!(cfg.r_max > 0.0)) {
        fail("r_max", "must be > 0");
    }
    if (!(cfg.doi >= 0.0 && cfg.doi < 1.0)) {
        fail("doi", "must be in [0, 1)");
    }
    if (cfg.num_trials < 1) {
        fail("num_trials", "must be >= 1");
    }
    if (cfg.test_points < 1) {
        fail("test_points", "must be >= 1");
    }
}

ScenarioConfig parse_config(std::string_view json_text) {
    json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
        throw ValidationError("", "config is not valid JSON");
    }
    if (!doc.is_object()) {
        throw ValidationError("", "config must be a JSON object");
    }
    ScenarioConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        assign_field(cfg, key, value);
    }
    validate_config(cfg);
    return cfg;
}

void apply_override(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
    json parsed = json::parse(value, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) {
        fail(std::string(key), "override value is not a JSON scalar");
    }
    assign_field(cfg, std::string(key), parsed);
    validate_config(cfg);
}

} // namespace radloc
