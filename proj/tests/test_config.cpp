#include <doctest.h>

#include "radloc/config.hpp"
#include "radloc/errors.hpp"

using namespace radloc;

TEST_CASE("empty config yields the documented defaults") {
    const ScenarioConfig cfg = parse_config("{}");
    CHECK(cfg.field_width == 100.0);
    CHECK(cfg.field_height == 100.0);
    CHECK(cfg.num_sensors == 100);
    CHECK(cfg.r_max == 45.0);
    CHECK(cfg.doi == 0.0);
    CHECK(cfg.mixed_ranges == false);
    CHECK(cfg.num_trials == 100);
    CHECK(cfg.test_points == 4);
}

TEST_CASE("partial overrides keep the other defaults") {
    const ScenarioConfig cfg = parse_config(R"({"doi": 0.2, "mixed_ranges": true})");
    CHECK(cfg.doi == 0.2);
    CHECK(cfg.mixed_ranges == true);
    CHECK(cfg.num_sensors == 100);
    CHECK(cfg.r_max == 45.0);
}

TEST_CASE("full config round-trips every field") {
    const ScenarioConfig cfg = parse_config(R"({
        "field_width": 200.0, "field_height": 150.0,
        "num_sensors": 60, "num_anchors": 24, "r_max": 30.0,
        "mixed_ranges": true, "doi": 0.1, "num_trials": 10,
        "test_points": 6, "master_seed": 18446744073709551615
    })");
    CHECK(cfg.field_width == 200.0);
    CHECK(cfg.field_height == 150.0);
    CHECK(cfg.num_sensors == 60);
    CHECK(cfg.num_anchors == 24);
    CHECK(cfg.r_max == 30.0);
    CHECK(cfg.mixed_ranges == true);
    CHECK(cfg.doi == 0.1);
    CHECK(cfg.num_trials == 10);
    CHECK(cfg.test_points == 6);
    CHECK(cfg.master_seed == 18446744073709551615ULL);
}

TEST_CASE("validation errors name the offending field") {
    try {
        parse_config(R"({"doi": 1.5})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "doi");
    }

    try {
        parse_config(R"({"num_trials": 0})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "num_trials");
    }

    try {
        parse_config(R"({"r_max": -1})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "r_max");
    }

    try {
        parse_config(R"({"num_sensors": 2.5})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "num_sensors");
    }

    try {
        parse_config(R"({"num_sensors": 10000000000})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "num_sensors");
    }

    try {
        parse_config(R"({"master_seed": -5})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "master_seed");
    }
}

TEST_CASE("strict mode rejects unknown keys and bad documents") {
    try {
        parse_config(R"({"doy": 0.1})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "doy");
    }

    CHECK_THROWS_AS(parse_config("not json"), ValidationError);
    CHECK_THROWS_AS(parse_config("[1, 2, 3]"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"mixed_ranges": "yes"})"), ValidationError);
}

TEST_CASE("overrides parse JSON scalars and re-validate") {
    ScenarioConfig cfg = parse_config("{}");
    apply_override(cfg, "doi", "0.25");
    CHECK(cfg.doi == 0.25);
    apply_override(cfg, "mixed_ranges", "true");
    CHECK(cfg.mixed_ranges == true);
    apply_override(cfg, "num_anchors", "36");
    CHECK(cfg.num_anchors == 36);

    CHECK_THROWS_AS(apply_override(cfg, "doi", "2.0"), ValidationError);
    CHECK_THROWS_AS(apply_override(cfg, "bogus", "1"), ValidationError);
    CHECK_THROWS_AS(apply_override(cfg, "num_trials", "\"many\""), ValidationError);
}
