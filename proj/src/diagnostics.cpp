#include "ngsmell/diagnostics.hpp"

#include <algorithm>
#include <tuple>

namespace ngsmell {

std::string format_diagnostic(const Diagnostic& d) {
    std::string out = d.severity == Severity::Error ? "error: " : "warning: ";
    if (!d.file.empty()) {
        out += d.file;
        if (d.line > 0) out += ":" + std::to_string(d.line);
        out += ": ";
    }
    out += d.message;
    return out;
}

void sort_diagnostics(DiagnosticList& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.file, a.line, a.message) < std::tie(b.file, b.line, b.message);
    });
}

}  // namespace ngsmell
