#pragma once

#include <string>
#include <vector>

#include "ngsmell/diagnostics.hpp"
#include "ngsmell/findings.hpp"
#include "ngsmell/scanner.hpp"

namespace ngsmell {

inline constexpr std::string_view kToolName = "ngsmell";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct Report {
    std::string tool_version{kToolVersion};
    FrameworkKind framework = FrameworkKind::Unknown;
    int files_analyzed = 0;
    std::vector<Finding> findings;  // already in run_detectors order
    DiagnosticList diagnostics;
};

// `<file>:<start>-<end> [<smell>] <subject>: <message>` per finding plus a
// per-smell footer; "No code smells detected." when empty.
std::string render_text(const Report& report);

// Stable JSON: fixed key order, two-space indent, trailing newline;
// byte-identical across runs on unchanged input.
std::string render_json(const Report& report);

}  // namespace ngsmell
