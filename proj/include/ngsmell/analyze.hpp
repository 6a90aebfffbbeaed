#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ngsmell/config.hpp"
#include "ngsmell/detectors.hpp"
#include "ngsmell/model.hpp"
#include "ngsmell/report.hpp"

namespace ngsmell {

struct AnalyzeOptions {
    std::vector<std::string> extra_excludes;
    std::optional<FrameworkKind> framework_override;
    std::set<SmellId> enabled;  // empty = all (subject to maturity gate)
    bool include_experimental = false;
};

// scan -> parse -> model (graphs, chains). Parse failures drop the file with
// a diagnostic; invalid UTF-8 likewise.
ProjectModel build_project_model(const std::filesystem::path& root, const AnalyzeOptions& options,
                                 DiagnosticList& diags);

Report analyze_project(const std::filesystem::path& root, const ThresholdConfig& cfg,
                       const AnalyzeOptions& options);

// The smell set an invocation enables: explicit selection, otherwise the
// whole catalog with experimental detectors gated behind the flag.
std::set<SmellId> effective_smells(const std::set<SmellId>& requested, bool include_experimental);

}  // namespace ngsmell
