#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ngsmell {

// Detection thresholds. All counts are >= 1, fractions lie in [0, 1].
// JSON config keys match the field names exactly.
struct ThresholdConfig {
    int large_component_loc = 200;
    int large_file_loc = 400;
    int large_file_min_decorated_classes = 3;
    int too_many_inputs = 6;
    int prop_drilling_min_depth = 3;
    int view_child_min_calls = 3;
    int coupled_service_min_components = 2;
    double coupled_service_max_usage_overlap = 0.0;
    double duplicate_similarity = 0.85;
    int any_min_count = 1;
    // Restricts Large File to the LOC clause (drops the decorated-class
    // count clause).
    bool large_file_loc_only = false;
    // Skips Inefficient Method Binding for components declaring the OnPush
    // change-detection strategy.
    bool exempt_onpush = false;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Throws ConfigError when a count is < 1 or a fraction is outside [0, 1].
void validate_config(const ThresholdConfig& cfg);

// Parses a JSON object with ThresholdConfig field names as keys; unknown
// keys are rejected. Missing keys keep their defaults.
ThresholdConfig parse_config(std::string_view json_text);

ThresholdConfig load_config_file(const std::string& path);

std::string config_to_json(const ThresholdConfig& cfg);

}  // namespace ngsmell
