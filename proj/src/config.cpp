#include "ngsmell/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ngsmell {

void validate_config(const ThresholdConfig& cfg) {
    auto check_count = [](int value, const char* name) {
        if (value < 1) {
            throw ConfigError(std::string(name) + " must be >= 1, got " + std::to_string(value));
        }
    };
    auto check_fraction = [](double value, const char* name) {
        if (value < 0.0 || value > 1.0) {
            throw ConfigError(std::string(name) + " must be in [0, 1], got " +
                              std::to_string(value));
        }
    };
    check_count(cfg.large_component_loc, "large_component_loc");
    check_count(cfg.large_file_loc, "large_file_loc");
    check_count(cfg.large_file_min_decorated_classes, "large_file_min_decorated_classes");
    check_count(cfg.too_many_inputs, "too_many_inputs");
    check_count(cfg.prop_drilling_min_depth, "prop_drilling_min_depth");
    check_count(cfg.view_child_min_calls, "view_child_min_calls");
    check_count(cfg.coupled_service_min_components, "coupled_service_min_components");
    check_count(cfg.any_min_count, "any_min_count");
    check_fraction(cfg.coupled_service_max_usage_overlap, "coupled_service_max_usage_overlap");
    check_fraction(cfg.duplicate_similarity, "duplicate_similarity");
}

ThresholdConfig parse_config(std::string_view json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw ConfigError("config is not a JSON object");
    }
    ThresholdConfig cfg;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        const nlohmann::json& value = it.value();
        auto as_int = [&]() -> int {
            if (!value.is_number_integer()) throw ConfigError(key + " must be an integer");
            return value.get<int>();
        };
        auto as_fraction = [&]() -> double {
            if (!value.is_number()) throw ConfigError(key + " must be a number");
            return value.get<double>();
        };
        auto as_bool = [&]() -> bool {
            if (!value.is_boolean()) throw ConfigError(key + " must be a boolean");
            return value.get<bool>();
        };
        if (key == "large_component_loc") cfg.large_component_loc = as_int();
        else if (key == "large_file_loc") cfg.large_file_loc = as_int();
        else if (key == "large_file_min_decorated_classes")
            cfg.large_file_min_decorated_classes = as_int();
        else if (key == "too_many_inputs") cfg.too_many_inputs = as_int();
        else if (key == "prop_drilling_min_depth") cfg.prop_drilling_min_depth = as_int();
        else if (key == "view_child_min_calls") cfg.view_child_min_calls = as_int();
        else if (key == "coupled_service_min_components")
            cfg.coupled_service_min_components = as_int();
        else if (key == "coupled_service_max_usage_overlap")
            cfg.coupled_service_max_usage_overlap = as_fraction();
        else if (key == "duplicate_similarity") cfg.duplicate_similarity = as_fraction();
        else if (key == "any_min_count") cfg.any_min_count = as_int();
        else if (key == "large_file_loc_only") cfg.large_file_loc_only = as_bool();
        else if (key == "exempt_onpush") cfg.exempt_onpush = as_bool();
        else throw ConfigError("unknown config key: " + key);
    }
    validate_config(cfg);
    return cfg;
}

ThresholdConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string config_to_json(const ThresholdConfig& cfg) {
    nlohmann::ordered_json doc;
    doc["large_component_loc"] = cfg.large_component_loc;
    doc["large_file_loc"] = cfg.large_file_loc;
    doc["large_file_min_decorated_classes"] = cfg.large_file_min_decorated_classes;
    doc["too_many_inputs"] = cfg.too_many_inputs;
    doc["prop_drilling_min_depth"] = cfg.prop_drilling_min_depth;
    doc["view_child_min_calls"] = cfg.view_child_min_calls;
    doc["coupled_service_min_components"] = cfg.coupled_service_min_components;
    doc["coupled_service_max_usage_overlap"] = cfg.coupled_service_max_usage_overlap;
    doc["duplicate_similarity"] = cfg.duplicate_similarity;
    doc["any_min_count"] = cfg.any_min_count;
    doc["large_file_loc_only"] = cfg.large_file_loc_only;
    doc["exempt_onpush"] = cfg.exempt_onpush;
    return doc.dump(2) + "\n";
}

}  // namespace ngsmell
