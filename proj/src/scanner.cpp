#include "ngsmell/scanner.hpp"

#include <algorithm>
#include <system_error>

#include "json.hpp"

namespace fs = std::filesystem;

namespace ngsmell {

std::string_view to_string(FrameworkKind kind) {
    switch (kind) {
        case FrameworkKind::Angular: return "angular";
        case FrameworkKind::ReactTypeScript: return "react-ts";
        case FrameworkKind::ReactJavaScript: return "react-js";
        case FrameworkKind::Unknown: return "unknown";
    }
    return "unknown";
}

FileKind classify_path(std::string_view relative_path) {
    auto slash = relative_path.find_last_of('/');
    std::string_view name =
        slash == std::string_view::npos ? relative_path : relative_path.substr(slash + 1);
    if (name == "package.json") return FileKind::Manifest;
    auto dot = name.find_last_of('.');
    if (dot == std::string_view::npos) return FileKind::Other;
    std::string_view ext = name.substr(dot);
    if (ext == ".ts" || ext == ".tsx") return FileKind::TypeScriptSource;
    if (ext == ".html") return FileKind::TemplateHtml;
    return FileKind::Other;
}

namespace {

std::vector<std::string_view> split_segments(std::string_view s) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t pos = s.find('/', start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

bool segment_match(std::string_view pat, std::string_view seg) {
    size_t p = 0, s = 0;
    size_t star = std::string_view::npos, star_s = 0;
    while (s < seg.size()) {
        if (p < pat.size() && pat[p] == '*') {
            star = p++;
            star_s = s;
        } else if (p < pat.size() && pat[p] == seg[s]) {
            ++p;
            ++s;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            s = ++star_s;
        } else {
            return false;
        }
    }
    while (p < pat.size() && pat[p] == '*') ++p;
    return p == pat.size();
}

bool match_segments(const std::vector<std::string_view>& pat, size_t pi,
                    const std::vector<std::string_view>& segs, size_t si) {
    if (pi == pat.size()) return si == segs.size();
    if (pat[pi] == "**") {
        if (match_segments(pat, pi + 1, segs, si)) return true;
        return si < segs.size() && match_segments(pat, pi, segs, si + 1);
    }
    if (si == segs.size()) return false;
    return segment_match(pat[pi], segs[si]) && match_segments(pat, pi + 1, segs, si + 1);
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
    return match_segments(split_segments(pattern), 0, split_segments(path), 0);
}

const std::vector<std::string>& default_excludes() {
    static const std::vector<std::string> kDefaults = {
        "node_modules/**", "dist/**", ".git/**", "**/*.spec.ts", "**/*.test.ts*",
    };
    return kDefaults;
}

namespace {

// Directories whose entire subtree is excluded by a literal `<dir>/**`
// pattern can be skipped without descending.
bool prunable_dir(const std::string& rel, const std::vector<std::string>& excludes) {
    for (const auto& pat : excludes) {
        if (pat.size() > 3 && pat.ends_with("/**")) {
            std::string_view prefix(pat.data(), pat.size() - 3);
            if (prefix.find('*') == std::string_view::npos && rel == prefix) return true;
        }
    }
    return false;
}

void walk(const fs::path& dir, const std::string& rel_prefix,
          const std::vector<std::string>& excludes, std::vector<FileEntry>& out) {
    std::error_code ec;
    fs::directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw ScanError(ScanError::Kind::IoError, dir.generic_string());
    for (const auto& entry : it) {
        std::string rel =
            rel_prefix.empty() ? entry.path().filename().generic_string()
                               : rel_prefix + "/" + entry.path().filename().generic_string();
        std::error_code tec;
        if (entry.is_symlink(tec)) continue;
        if (entry.is_directory(tec)) {
            if (!prunable_dir(rel, excludes)) walk(entry.path(), rel, excludes, out);
            continue;
        }
        if (!entry.is_regular_file(tec)) continue;
        bool excluded = false;
        for (const auto& pat : excludes) {
            if (glob_match(pat, rel)) {
                excluded = true;
                break;
            }
        }
        if (excluded) continue;
        uint64_t size = entry.file_size(tec);
        if (tec) throw ScanError(ScanError::Kind::IoError, rel);
        out.push_back(FileEntry{rel, classify_path(rel), size});
    }
}

}  // namespace

std::vector<FileEntry> scan_project(const fs::path& root,
                                    const std::vector<std::string>& excludes) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw ScanError(ScanError::Kind::RootNotFound, root.generic_string());
    }
    std::vector<FileEntry> out;
    walk(root, "", excludes, out);
    std::sort(out.begin(), out.end(),
              [](const FileEntry& a, const FileEntry& b) { return a.path < b.path; });
    return out;
}

namespace {

bool has_dependency(const nlohmann::json& manifest, std::string_view name) {
    for (const char* section : {"dependencies", "devDependencies"}) {
        auto it = manifest.find(section);
        if (it != manifest.end() && it->is_object() && it->contains(std::string(name))) {
            return true;
        }
    }
    return false;
}

}  // namespace

FrameworkKind detect_framework(std::string_view manifest_text, DiagnosticList& diags) {
    nlohmann::json manifest =
        nlohmann::json::parse(manifest_text, nullptr, /*allow_exceptions=*/false);
    if (manifest.is_discarded() || !manifest.is_object()) {
        warn(diags, "package.json", 0, "malformed manifest, framework unknown");
        return FrameworkKind::Unknown;
    }
    if (has_dependency(manifest, "@angular/core")) return FrameworkKind::Angular;
    if (has_dependency(manifest, "react")) {
        return has_dependency(manifest, "typescript") ? FrameworkKind::ReactTypeScript
                                                      : FrameworkKind::ReactJavaScript;
    }
    return FrameworkKind::Unknown;
}

}  // namespace ngsmell
