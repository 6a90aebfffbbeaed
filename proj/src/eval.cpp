#include "ngsmell/eval.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "ngsmell/analyze.hpp"

namespace fs = std::filesystem;

namespace ngsmell {

std::vector<DatasetInstance> load_manifest(const fs::path& manifest_file,
                                           const fs::path& dataset_root) {
    std::ifstream in(manifest_file, std::ios::binary);
    if (!in) throw ManifestError("cannot open manifest: " + manifest_file.generic_string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json doc = nlohmann::json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_array()) {
        throw ManifestError("manifest must be a JSON array of records");
    }
    std::vector<DatasetInstance> instances;
    for (const auto& record : doc) {
        if (!record.is_object() || !record.contains("id") || !record.contains("smell") ||
            !record.contains("variant") || !record.contains("path")) {
            throw ManifestError("manifest record missing id/smell/variant/path: " + record.dump());
        }
        DatasetInstance instance;
        instance.id = record["id"].get<std::string>();
        std::string smell_name = record["smell"].get<std::string>();
        auto smell = smell_from_string(smell_name);
        if (!smell) {
            throw ManifestError("record '" + instance.id + "': unknown smell " + smell_name);
        }
        instance.smell = *smell;
        std::string variant = record["variant"].get<std::string>();
        if (variant == "smelly") instance.variant = Variant::Smelly;
        else if (variant == "refactored") instance.variant = Variant::Refactored;
        else throw ManifestError("record '" + instance.id + "': unknown variant " + variant);
        instance.path = record["path"].get<std::string>();
        if (!fs::is_directory(dataset_root / instance.path)) {
            throw ManifestError("record '" + instance.id + "': path does not exist: " +
                                instance.path);
        }
        instances.push_back(std::move(instance));
    }
    // pairing invariant: each id exactly twice, one per variant, same smell
    std::map<std::string, std::vector<const DatasetInstance*>> by_id;
    for (const auto& instance : instances) by_id[instance.id].push_back(&instance);
    for (const auto& [id, group] : by_id) {
        if (group.size() != 2) {
            throw ManifestError("id '" + id + "' appears " + std::to_string(group.size()) +
                                " times, expected exactly 2");
        }
        if (group[0]->variant == group[1]->variant) {
            throw ManifestError("id '" + id + "' lacks a smelly/refactored pair");
        }
        if (group[0]->smell != group[1]->smell) {
            throw ManifestError("id '" + id + "' mixes two different smells");
        }
    }
    return instances;
}

bool classify_instance(const DatasetInstance& instance, const fs::path& dataset_root,
                       const ThresholdConfig& cfg, DiagnosticList& diags) {
    AnalyzeOptions options;
    // dataset instances are bare source directories; the single-detector
    // run bypasses framework dispatch
    options.framework_override = FrameworkKind::Angular;
    DiagnosticList local;
    ProjectModel model = build_project_model(dataset_root / instance.path, options, local);
    bool had_parse_failure = false;
    for (const auto& d : local) {
        if (d.message.rfind("parse error", 0) == 0 || d.message.rfind("invalid UTF-8", 0) == 0) {
            had_parse_failure = true;
        }
    }
    if (had_parse_failure) {
        warn(diags, instance.path, 0,
             "instance '" + instance.id + "' had files skipped by parse errors; classified on the rest");
    }
    std::vector<Finding> findings = run_single_detector(model, cfg, instance.smell);
    return !findings.empty();
}

std::map<SmellId, ConfusionMatrix> evaluate(const std::vector<DatasetInstance>& instances,
                                            const fs::path& dataset_root,
                                            const ThresholdConfig& cfg,
                                            bool include_experimental, DiagnosticList& diags) {
    std::map<SmellId, ConfusionMatrix> results;
    bool skipped_experimental = false;
    for (const auto& instance : instances) {
        if (!include_experimental && maturity_of(instance.smell) == Maturity::Experimental) {
            skipped_experimental = true;
            continue;
        }
        bool positive = classify_instance(instance, dataset_root, cfg, diags);
        ConfusionMatrix& cm = results[instance.smell];
        if (instance.variant == Variant::Smelly) {
            positive ? ++cm.tp : ++cm.fn;
        } else {
            positive ? ++cm.fp : ++cm.tn;
        }
    }
    if (skipped_experimental) {
        warn(diags, "", 0,
             "experimental-smell instances skipped; pass --experimental to include them");
    }
    return results;
}

Metrics compute_metrics(const ConfusionMatrix& cm) {
    Metrics m;
    int total = cm.total();
    m.accuracy = total == 0 ? 0.0 : static_cast<double>(cm.tp + cm.tn) / total;
    m.precision = (cm.tp + cm.fp) == 0 ? 0.0 : static_cast<double>(cm.tp) / (cm.tp + cm.fp);
    m.recall = (cm.tp + cm.fn) == 0 ? 0.0 : static_cast<double>(cm.tp) / (cm.tp + cm.fn);
    m.f1 = (m.precision + m.recall) == 0.0
               ? 0.0
               : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

namespace {

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

std::string fraction3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render_eval_json(const std::map<SmellId, ConfusionMatrix>& results,
                             const DiagnosticList& diags) {
    // top-level object maps smell ids straight onto matrices and metrics;
    // diagnostics go to stderr at the CLI layer
    (void)diags;
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& desc : smell_catalog()) {
        auto it = results.find(desc.id);
        if (it == results.end()) continue;
        const ConfusionMatrix& cm = it->second;
        Metrics m = compute_metrics(cm);
        nlohmann::ordered_json entry;
        entry["tp"] = cm.tp;
        entry["fp"] = cm.fp;
        entry["tn"] = cm.tn;
        entry["fn"] = cm.fn;
        entry["accuracy"] = round3(m.accuracy);
        entry["precision"] = round3(m.precision);
        entry["recall"] = round3(m.recall);
        entry["f1"] = round3(m.f1);
        doc[std::string(desc.name)] = std::move(entry);
    }
    return doc.dump(2) + "\n";
}

std::string render_eval_text(const std::map<SmellId, ConfusionMatrix>& results,
                             const DiagnosticList& diags) {
    std::string out;
    out += "smell                              tp  fp  tn  fn  accuracy precision recall  f1\n";
    for (const auto& desc : smell_catalog()) {
        auto it = results.find(desc.id);
        if (it == results.end()) continue;
        const ConfusionMatrix& cm = it->second;
        Metrics m = compute_metrics(cm);
        char line[160];
        std::snprintf(line, sizeof line, "%-34s %3d %3d %3d %3d  %s    %s     %s   %s\n",
                      std::string(desc.name).c_str(), cm.tp, cm.fp, cm.tn, cm.fn,
                      fraction3(m.accuracy).c_str(), fraction3(m.precision).c_str(),
                      fraction3(m.recall).c_str(), fraction3(m.f1).c_str());
        out += line;
    }
    if (results.empty()) out += "(no instances evaluated)\n";
    for (const auto& d : diags) out += format_diagnostic(d) + "\n";
    return out;
}

}  // namespace ngsmell
