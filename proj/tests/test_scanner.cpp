#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "ngsmell/scanner.hpp"

#include "test_support.hpp"

using namespace ngsmell;
namespace fs = std::filesystem;

namespace {

struct TempTree {
    fs::path root;

    TempTree() {
        root = fs::temp_directory_path() /
               ("ngsmell_scan_" + std::to_string(reinterpret_cast<uintptr_t>(this)));
        fs::create_directories(root);
    }
    ~TempTree() { fs::remove_all(root); }

    void add(const std::string& relative, const std::string& content = "x") {
        fs::path p = root / relative;
        fs::create_directories(p.parent_path());
        std::ofstream(p) << content;
    }
};

}  // namespace

TEST_CASE("classification by extension and name") {
    CHECK(classify_path("a.ts") == FileKind::TypeScriptSource);
    CHECK(classify_path("dir/a.tsx") == FileKind::TypeScriptSource);
    CHECK(classify_path("a.html") == FileKind::TemplateHtml);
    CHECK(classify_path("package.json") == FileKind::Manifest);
    CHECK(classify_path("sub/package.json") == FileKind::Manifest);
    CHECK(classify_path("not-package.json") == FileKind::Other);
    CHECK(classify_path("a.js") == FileKind::Other);
    CHECK(classify_path("README") == FileKind::Other);
}

TEST_CASE("scan classifies and orders entries") {
    TempTree tree;
    tree.add("a.ts");
    tree.add("a.html");
    tree.add("package.json", "{}");
    auto entries = scan_project(tree.root, {});
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].path == "a.html");
    CHECK(entries[0].kind == FileKind::TemplateHtml);
    CHECK(entries[1].path == "a.ts");
    CHECK(entries[1].kind == FileKind::TypeScriptSource);
    CHECK(entries[2].path == "package.json");
    CHECK(entries[2].kind == FileKind::Manifest);
}

TEST_CASE("scan of empty directory is empty") {
    TempTree tree;
    CHECK(scan_project(tree.root, {}).empty());
}

TEST_CASE("default excludes drop node_modules and spec files") {
    TempTree tree;
    tree.add("node_modules/lib/x.ts");
    tree.add("dist/out.ts");
    tree.add("src/app.spec.ts");
    tree.add("src/app.test.tsx");
    tree.add("src/app.ts");
    auto entries = scan_project(tree.root, default_excludes());
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].path == "src/app.ts");
}

TEST_CASE("scan_project is deterministic and paths exist") {
    TempTree tree;
    tree.add("b/two.ts");
    tree.add("a/one.ts");
    tree.add("c.html");
    auto first = scan_project(tree.root, {});
    auto second = scan_project(tree.root, {});
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].path == second[i].path);
        CHECK(first[i].kind == second[i].kind);
        CHECK(fs::exists(tree.root / first[i].path));
    }
}

TEST_CASE("missing root raises RootNotFound") {
    CHECK_THROWS_AS(scan_project("/nonexistent/ngsmell/root", {}), ScanError);
}

TEST_CASE("glob semantics") {
    CHECK(glob_match("node_modules/**", "node_modules/a/b.ts"));
    CHECK_FALSE(glob_match("node_modules/**", "src/node_modules_like.ts"));
    CHECK(glob_match("**/*.spec.ts", "a/b/c.spec.ts"));
    CHECK(glob_match("**/*.spec.ts", "c.spec.ts"));
    CHECK_FALSE(glob_match("**/*.spec.ts", "c.spec.tsx"));
    CHECK(glob_match("**/*.test.ts*", "x/y.test.tsx"));
    CHECK(glob_match("src/*.ts", "src/a.ts"));
    CHECK_FALSE(glob_match("src/*.ts", "src/sub/a.ts"));
    CHECK(glob_match("exact.txt", "exact.txt"));
    CHECK_FALSE(glob_match("exact.txt", "other.txt"));
}

namespace {

std::string manifest_with(bool angular, bool react, bool typescript) {
    std::string deps;
    if (angular) deps += "\"@angular/core\": \"^17.0.0\",";
    if (react) deps += "\"react\": \"^18.0.0\",";
    if (typescript) deps += "\"typescript\": \"^5.0.0\",";
    if (!deps.empty()) deps.pop_back();
    return "{\"dependencies\": {" + deps + "}}";
}

}  // namespace

TEST_CASE("framework detection rule table over all presence combinations") {
    // exhaustive oracle over the 8 combinations of angular/react/typescript
    for (int mask = 0; mask < 8; ++mask) {
        bool angular = mask & 1, react = mask & 2, typescript = mask & 4;
        DiagnosticList diags;
        FrameworkKind got = detect_framework(manifest_with(angular, react, typescript), diags);
        FrameworkKind want = angular               ? FrameworkKind::Angular
                             : react && typescript ? FrameworkKind::ReactTypeScript
                             : react               ? FrameworkKind::ReactJavaScript
                                                   : FrameworkKind::Unknown;
        CAPTURE(mask);
        CHECK(got == want);
        CHECK(diags.empty());
    }
}

TEST_CASE("framework detection reads devDependencies and tie-breaks to Angular") {
    DiagnosticList diags;
    CHECK(detect_framework(R"({"devDependencies": {"@angular/core": "*"}})", diags) ==
          FrameworkKind::Angular);
    CHECK(detect_framework(R"({"dependencies": {"@angular/core": "*", "react": "*"}})", diags) ==
          FrameworkKind::Angular);
    CHECK(detect_framework(
              R"({"dependencies": {"react": "*"}, "devDependencies": {"typescript": "*"}})",
              diags) == FrameworkKind::ReactTypeScript);
}

TEST_CASE("malformed manifest downgrades to Unknown with a warning") {
    DiagnosticList diags;
    CHECK(detect_framework("{not json", diags) == FrameworkKind::Unknown);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].severity == Severity::Warning);
    DiagnosticList diags2;
    CHECK(detect_framework("[1, 2]", diags2) == FrameworkKind::Unknown);
    CHECK(diags2.size() == 1);
}
