#include "doctest.h"

#include "json.hpp"

#include "ngsmell/config.hpp"

using namespace ngsmell;

TEST_CASE("defaults satisfy the validation rules") {
    ThresholdConfig cfg;
    CHECK_NOTHROW(validate_config(cfg));
    CHECK(cfg.large_component_loc == 200);
    CHECK(cfg.large_file_loc == 400);
    CHECK(cfg.large_file_min_decorated_classes == 3);
    CHECK(cfg.too_many_inputs == 6);
    CHECK(cfg.prop_drilling_min_depth == 3);
    CHECK(cfg.view_child_min_calls == 3);
    CHECK(cfg.coupled_service_min_components == 2);
    CHECK(cfg.coupled_service_max_usage_overlap == doctest::Approx(0.0));
    CHECK(cfg.duplicate_similarity == doctest::Approx(0.85));
    CHECK(cfg.any_min_count == 1);
    CHECK_FALSE(cfg.large_file_loc_only);
    CHECK_FALSE(cfg.exempt_onpush);
}

TEST_CASE("every field parses under its exact name") {
    ThresholdConfig cfg = parse_config(R"({
  "large_component_loc": 120,
  "large_file_loc": 300,
  "large_file_min_decorated_classes": 2,
  "too_many_inputs": 4,
  "prop_drilling_min_depth": 2,
  "view_child_min_calls": 5,
  "coupled_service_min_components": 3,
  "coupled_service_max_usage_overlap": 0.25,
  "duplicate_similarity": 0.9,
  "any_min_count": 2,
  "large_file_loc_only": true,
  "exempt_onpush": true
})");
    CHECK(cfg.large_component_loc == 120);
    CHECK(cfg.large_file_loc == 300);
    CHECK(cfg.large_file_min_decorated_classes == 2);
    CHECK(cfg.too_many_inputs == 4);
    CHECK(cfg.prop_drilling_min_depth == 2);
    CHECK(cfg.view_child_min_calls == 5);
    CHECK(cfg.coupled_service_min_components == 3);
    CHECK(cfg.coupled_service_max_usage_overlap == doctest::Approx(0.25));
    CHECK(cfg.duplicate_similarity == doctest::Approx(0.9));
    CHECK(cfg.any_min_count == 2);
    CHECK(cfg.large_file_loc_only);
    CHECK(cfg.exempt_onpush);
}

TEST_CASE("partial configs keep defaults for missing keys") {
    ThresholdConfig cfg = parse_config(R"({"too_many_inputs": 9})");
    CHECK(cfg.too_many_inputs == 9);
    CHECK(cfg.large_component_loc == 200);
}

TEST_CASE("unknown keys are rejected") {
    CHECK_THROWS_AS(parse_config(R"({"no_such_threshold": 1})"), ConfigError);
}

TEST_CASE("counts below one and fractions outside the unit interval are rejected") {
    CHECK_THROWS_AS(parse_config(R"({"any_min_count": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"large_component_loc": -5})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"duplicate_similarity": 1.5})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"coupled_service_max_usage_overlap": -0.1})"), ConfigError);
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"too_many_inputs": "six"})"), ConfigError);
}

TEST_CASE("config serialization round-trips") {
    ThresholdConfig cfg;
    cfg.too_many_inputs = 7;
    cfg.duplicate_similarity = 0.75;
    ThresholdConfig back = parse_config(config_to_json(cfg));
    CHECK(back.too_many_inputs == 7);
    CHECK(back.duplicate_similarity == doctest::Approx(0.75));
    CHECK(back.large_component_loc == cfg.large_component_loc);
}
