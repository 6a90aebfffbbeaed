#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ngsmell/analyze.hpp"
#include "ngsmell/model.hpp"
#include "ngsmell/ts_ast.hpp"

#include "oracles.hpp"

namespace test_support {

inline std::filesystem::path fixture_path(const std::string& relative) {
    return std::filesystem::path(NGSMELL_FIXTURE_DIR) / relative;
}

inline std::filesystem::path dataset_path() {
    return std::filesystem::path(NGSMELL_DATASET_DIR);
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline ngsmell::ts::SyntaxTree parse_ok(const std::string& file_name, std::string source) {
    ngsmell::DiagnosticList diags;
    ngsmell::FileEntry entry{file_name, ngsmell::FileKind::TypeScriptSource, source.size()};
    auto outcome = ngsmell::ts::parse_typescript(entry, std::move(source), diags);
    REQUIRE(outcome.tree.has_value());
    return std::move(*outcome.tree);
}

inline ngsmell::ProjectModel model_from_fixture(const std::string& relative,
                                                ngsmell::DiagnosticList& diags) {
    ngsmell::AnalyzeOptions options;
    options.framework_override = ngsmell::FrameworkKind::Angular;
    return ngsmell::build_project_model(fixture_path(relative), options, diags);
}

}  // namespace test_support
