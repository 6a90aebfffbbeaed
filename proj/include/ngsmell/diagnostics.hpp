#pragma once

#include <string>
#include <vector>

namespace ngsmell {

enum class Severity { Warning, Error };

struct Diagnostic {
    Severity severity = Severity::Warning;
    std::string file;  // relative path, empty = project level
    int line = 0;      // 1-based, 0 = whole file
    std::string message;
};

using DiagnosticList = std::vector<Diagnostic>;

std::string format_diagnostic(const Diagnostic& d);

// Stable order for byte-identical reports.
void sort_diagnostics(DiagnosticList& diags);

inline void warn(DiagnosticList& diags, std::string file, int line, std::string message) {
    diags.push_back(Diagnostic{Severity::Warning, std::move(file), line, std::move(message)});
}

}  // namespace ngsmell
