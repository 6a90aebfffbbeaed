#include "ngsmell/report.hpp"

#include <array>
#include <cmath>

#include "json.hpp"

namespace ngsmell {

namespace {

std::array<int, kSmellCount> summarize(const Report& report) {
    std::array<int, kSmellCount> counts{};
    for (const auto& f : report.findings) ++counts[static_cast<size_t>(f.smell)];
    return counts;
}

// Fractions are rounded to 3 decimals wherever they surface in reports.
double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

}  // namespace

std::string render_text(const Report& report) {
    std::string out;
    out += std::string(kToolName) + " " + report.tool_version + "\n";
    out += "framework: " + std::string(to_string(report.framework)) + "\n";
    out += "files analyzed: " + std::to_string(report.files_analyzed) + "\n";
    for (const auto& d : report.diagnostics) {
        out += format_diagnostic(d) + "\n";
    }
    out += "\n";
    if (report.findings.empty()) {
        out += "No code smells detected.\n";
        return out;
    }
    for (const auto& f : report.findings) {
        out += f.file + ":" + std::to_string(f.start_line) + "-" + std::to_string(f.end_line) +
               " [" + std::string(to_string(f.smell)) + "] " + f.subject + ": " + f.message + "\n";
    }
    out += "\nfindings by smell:\n";
    auto counts = summarize(report);
    int total = 0;
    for (const auto& desc : smell_catalog()) {
        int count = counts[static_cast<size_t>(desc.id)];
        total += count;
        if (count > 0) {
            out += "  " + std::string(desc.name) + ": " + std::to_string(count) + "\n";
        }
    }
    out += "total: " + std::to_string(total) + "\n";
    return out;
}

std::string render_json(const Report& report) {
    nlohmann::ordered_json doc;
    doc["tool_version"] = report.tool_version;
    doc["framework"] = std::string(to_string(report.framework));
    doc["files_analyzed"] = report.files_analyzed;
    doc["findings"] = nlohmann::ordered_json::array();
    for (const auto& f : report.findings) {
        nlohmann::ordered_json jf;
        jf["smell"] = std::string(to_string(f.smell));
        jf["file"] = f.file;
        jf["start_line"] = f.start_line;
        jf["end_line"] = f.end_line;
        jf["subject"] = f.subject;
        jf["message"] = f.message;
        jf["maturity"] = std::string(to_string(f.maturity));
        nlohmann::ordered_json meta = nlohmann::ordered_json::object();
        for (const auto& [key, value] : f.metadata) {
            if (const auto* i = std::get_if<int64_t>(&value)) meta[key] = *i;
            else if (const auto* d = std::get_if<double>(&value)) meta[key] = round3(*d);
            else meta[key] = std::get<std::string>(value);
        }
        jf["metadata"] = std::move(meta);
        doc["findings"].push_back(std::move(jf));
    }
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    auto counts = summarize(report);
    for (const auto& desc : smell_catalog()) {
        summary[std::string(desc.name)] = counts[static_cast<size_t>(desc.id)];
    }
    doc["summary"] = std::move(summary);
    doc["diagnostics"] = nlohmann::ordered_json::array();
    for (const auto& d : report.diagnostics) {
        doc["diagnostics"].push_back(format_diagnostic(d));
    }
    return doc.dump(2) + "\n";
}

}  // namespace ngsmell
