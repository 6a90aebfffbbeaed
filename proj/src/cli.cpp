#include "ngsmell/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ngsmell/analyze.hpp"
#include "ngsmell/eval.hpp"
#include "ngsmell/report.hpp"

namespace ngsmell {

namespace {

std::optional<ThresholdConfig> resolve_config(const std::string& config_path, std::ostream& err) {
    std::string path = config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("NG_SMELL_CONFIG")) path = env;
    }
    if (path.empty()) return ThresholdConfig{};
    try {
        return load_config_file(path);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return std::nullopt;
    }
}

std::optional<std::set<SmellId>> parse_smell_list(const std::string& csv, std::ostream& err) {
    std::set<SmellId> out;
    if (csv.empty()) return out;
    std::stringstream stream(csv);
    std::string name;
    while (std::getline(stream, name, ',')) {
        if (name.empty()) continue;
        auto id = smell_from_string(name);
        if (!id) {
            err << "error: unknown smell '" << name << "' (see list-smells)\n";
            return std::nullopt;
        }
        out.insert(*id);
    }
    return out;
}

bool write_output(const std::string& text, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return true;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << out_path << "\n";
        return false;
    }
    file << text;
    return true;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{std::string(kToolName) + " " + std::string(kToolVersion) +
                 " - Angular/TypeScript code smell detector"};
    app.require_subcommand(0, 1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Analyze a project tree for code smells");
    std::string target;
    std::string format = "text";
    std::string config_path;
    std::string smells_csv;
    std::string framework = "auto";
    std::string out_path;
    std::vector<std::string> excludes;
    bool experimental = false;
    analyze->add_option("path", target, "Project root to analyze")->required();
    analyze->add_option("--format", format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--config", config_path, "Threshold config file (JSON)");
    analyze->add_option("--smells", smells_csv, "Comma-separated smell ids to run");
    analyze->add_flag("--experimental", experimental, "Include experimental detectors");
    analyze->add_option("--framework", framework, "Framework override: auto|angular|react-ts")
        ->check(CLI::IsMember({"auto", "angular", "react-ts"}));
    analyze->add_option("--exclude", excludes, "Additional exclude glob (repeatable)");
    analyze->add_option("--out", out_path, "Write the report to a file instead of stdout");

    // evaluate
    auto* evaluate_cmd =
        app.add_subcommand("evaluate", "Run detectors over a labeled smelly/refactored dataset");
    std::string dataset_dir;
    std::string manifest_path;
    std::string eval_format = "text";
    std::string eval_config_path;
    std::string eval_out_path;
    bool eval_experimental = false;
    evaluate_cmd->add_option("--dataset", dataset_dir, "Dataset root directory")->required();
    evaluate_cmd->add_option("--manifest", manifest_path, "Dataset manifest JSON")->required();
    evaluate_cmd->add_option("--format", eval_format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    evaluate_cmd->add_option("--config", eval_config_path, "Threshold config file (JSON)");
    evaluate_cmd->add_flag("--experimental", eval_experimental,
                           "Evaluate experimental smells too");
    evaluate_cmd->add_option("--out", eval_out_path, "Write results to a file instead of stdout");

    // list-smells
    auto* list_cmd = app.add_subcommand("list-smells", "Print the smell catalog");

    std::vector<std::string> argv_copy = args;
    std::vector<const char*> argv;
    argv.push_back("ngsmell");
    for (const auto& a : argv_copy) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    if (list_cmd->parsed()) {
        for (const auto& desc : smell_catalog()) {
            std::string maturity = maturity_of(desc.id) == Maturity::Evaluated ? "Evaluated"
                                                                               : "Experimental";
            char line[200];
            std::snprintf(line, sizeof line, "%-34s %-12s %s\n", std::string(desc.name).c_str(),
                          maturity.c_str(), std::string(desc.description).c_str());
            out << line;
        }
        return 0;
    }

    if (analyze->parsed()) {
        auto cfg = resolve_config(config_path, err);
        if (!cfg) return 2;
        auto smells = parse_smell_list(smells_csv, err);
        if (!smells) return 2;
        AnalyzeOptions options;
        options.extra_excludes = excludes;
        options.enabled = *smells;
        options.include_experimental = experimental;
        if (framework == "angular") options.framework_override = FrameworkKind::Angular;
        else if (framework == "react-ts") options.framework_override = FrameworkKind::ReactTypeScript;
        try {
            Report report = analyze_project(target, *cfg, options);
            std::string rendered = format == "json" ? render_json(report) : render_text(report);
            if (!write_output(rendered, out_path, out, err)) return 2;
            return report.findings.empty() ? 0 : 1;
        } catch (const ScanError& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
    }

    if (evaluate_cmd->parsed()) {
        auto cfg = resolve_config(eval_config_path, err);
        if (!cfg) return 2;
        try {
            auto instances = load_manifest(manifest_path, dataset_dir);
            DiagnosticList diags;
            auto results = evaluate(instances, dataset_dir, *cfg, eval_experimental, diags);
            sort_diagnostics(diags);
            std::string rendered;
            if (eval_format == "json") {
                rendered = render_eval_json(results, diags);
                for (const auto& d : diags) err << format_diagnostic(d) << "\n";
            } else {
                rendered = render_eval_text(results, diags);
            }
            if (!write_output(rendered, eval_out_path, out, err)) return 2;
            return 0;
        } catch (const ManifestError& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        } catch (const ScanError& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
    }

    out << app.help();
    return 0;
}

}  // namespace ngsmell
