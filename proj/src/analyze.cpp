#include "ngsmell/analyze.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace ngsmell {

namespace {

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

ProjectModel build_project_model(const fs::path& root, const AnalyzeOptions& options,
                                 DiagnosticList& diags) {
    std::vector<std::string> excludes = default_excludes();
    for (const auto& pattern : options.extra_excludes) excludes.push_back(pattern);
    std::vector<FileEntry> entries = scan_project(root, excludes);

    FrameworkKind framework = FrameworkKind::Unknown;
    if (options.framework_override) {
        framework = *options.framework_override;
    } else {
        // shallowest manifest wins; scan order is lexicographic so the first
        // one at minimal depth is deterministic
        const FileEntry* manifest = nullptr;
        size_t best_depth = SIZE_MAX;
        for (const auto& entry : entries) {
            if (entry.kind != FileKind::Manifest) continue;
            size_t depth = static_cast<size_t>(std::count(entry.path.begin(), entry.path.end(), '/'));
            if (depth < best_depth) {
                best_depth = depth;
                manifest = &entry;
            }
        }
        if (manifest) {
            if (auto content = read_file(root / manifest->path)) {
                framework = detect_framework(*content, diags);
            }
        }
    }

    std::vector<ts::SyntaxTree> trees;
    for (const auto& entry : entries) {
        if (entry.kind != FileKind::TypeScriptSource) continue;
        auto content = read_file(root / entry.path);
        if (!content) {
            warn(diags, entry.path, 0, "unreadable file skipped");
            continue;
        }
        if (!is_valid_utf8(*content)) {
            warn(diags, entry.path, 0, "invalid UTF-8, file skipped");
            continue;
        }
        ts::ParseOutcome outcome = ts::parse_typescript(entry, std::move(*content), diags);
        if (outcome.error) {
            warn(diags, entry.path, outcome.error->line,
                 "parse error: " + outcome.error->message + " (column " +
                     std::to_string(outcome.error->column) + "); file skipped");
            continue;
        }
        trees.push_back(std::move(*outcome.tree));
    }

    FileReadFn reader = [&root](const std::string& relative) -> std::optional<std::string> {
        return read_file(root / relative);
    };
    return build_full_model(std::move(trees), reader, framework, diags);
}

std::set<SmellId> effective_smells(const std::set<SmellId>& requested,
                                   bool include_experimental) {
    std::set<SmellId> enabled;
    if (!requested.empty()) {
        enabled = requested;
    } else {
        for (const auto& desc : smell_catalog()) enabled.insert(desc.id);
    }
    if (!include_experimental && requested.empty()) {
        std::set<SmellId> filtered;
        for (SmellId id : enabled) {
            if (maturity_of(id) == Maturity::Evaluated) filtered.insert(id);
        }
        return filtered;
    }
    return enabled;
}

Report analyze_project(const fs::path& root, const ThresholdConfig& cfg,
                       const AnalyzeOptions& options) {
    Report report;
    DiagnosticList diags;
    ProjectModel model = build_project_model(root, options, diags);
    report.framework = model.framework;
    report.files_analyzed = static_cast<int>(model.files.size());
    std::set<SmellId> enabled = effective_smells(options.enabled, options.include_experimental);
    report.findings = run_detectors(model, cfg, enabled);
    sort_diagnostics(diags);
    report.diagnostics = std::move(diags);
    return report;
}

}  // namespace ngsmell
