#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ngsmell/diagnostics.hpp"

namespace ngsmell {

enum class FileKind { TypeScriptSource, TemplateHtml, Manifest, Other };

struct FileEntry {
    std::string path;  // normalized, '/'-separated, relative to the scan root
    FileKind kind = FileKind::Other;
    uint64_t size_bytes = 0;
};

enum class FrameworkKind { Angular, ReactTypeScript, ReactJavaScript, Unknown };

std::string_view to_string(FrameworkKind kind);

class ScanError : public std::runtime_error {
public:
    enum class Kind { RootNotFound, IoError };

    ScanError(Kind kind, std::string path)
        : std::runtime_error(kind == Kind::RootNotFound
                                 ? "project root not found: " + path
                                 : "i/o error while scanning: " + path),
          kind_(kind),
          path_(std::move(path)) {}

    Kind kind() const { return kind_; }
    const std::string& path() const { return path_; }

private:
    Kind kind_;
    std::string path_;
};

FileKind classify_path(std::string_view relative_path);

// Glob over '/'-separated relative paths: `*` matches within a segment,
// `**` matches across segments, everything else is literal.
bool glob_match(std::string_view pattern, std::string_view path);

const std::vector<std::string>& default_excludes();

// Every regular file under root not matched by excludes, classified and
// ordered lexicographically by relative path.
std::vector<FileEntry> scan_project(const std::filesystem::path& root,
                                    const std::vector<std::string>& excludes);

// Classifies a package.json body. `@angular/core` wins over react; malformed
// input downgrades to Unknown with a warning, never fails.
FrameworkKind detect_framework(std::string_view manifest_text, DiagnosticList& diags);

}  // namespace ngsmell
