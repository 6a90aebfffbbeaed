#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ngsmell/scanner.hpp"
#include "ngsmell/template_ast.hpp"
#include "ngsmell/ts_ast.hpp"

namespace ngsmell {

// Where a component's template text lives, for mapping template spans back
// to file lines.
struct TemplateOrigin {
    enum class Kind { Inline, ExternalFile, Missing };
    Kind kind = Kind::Missing;
    std::string file;         // .ts file for inline, .html file otherwise
    uint32_t base_offset = 0; // offset of the template text inside `file`
    LineIndex lines;          // line index of `file`s full content
};

struct InputDecl {
    std::string name;        // class property name
    std::string bound_name;  // template-facing name: the @Input alias when given
    std::optional<ts::TypeAnnotation> type;
    SourceSpan span;
};

struct ViewChildDecl {
    std::string property;  // class member holding the reference
    std::string target;    // decorator argument: class or template ref name
    SourceSpan span;
};

struct MethodInfo {
    std::string name;
    int statement_count = 0;
    SourceSpan span;
};

struct ComponentInfo {
    std::string class_name;
    std::string file;
    SourceSpan span;        // includes decorators
    SourceSpan class_span;  // excludes decorators
    int start_line = 1;
    int end_line = 1;
    int class_decl_start_line = 1;  // first line of class_span
    std::optional<std::string> extends_target;
    std::optional<std::string> selector;
    LineIndex file_lines;  // line index of the declaring .ts file
    tpl::TemplateAst template_ast;
    TemplateOrigin template_origin;
    std::vector<InputDecl> inputs;
    std::vector<std::string> outputs;
    std::vector<ViewChildDecl> view_children;
    std::vector<std::string> injected;  // constructor parameter type names
    std::vector<MethodInfo> methods;
    int class_loc = 1;
    bool onpush = false;
    int tree_index = -1;
    int class_index = -1;  // index into per-tree class list

    // derived facts for detectors
    std::map<std::string, std::string> ctor_param_types;  // name -> type name
    std::vector<ts::MemberChain> chains;                  // all member bodies/initializers
    std::set<std::string> body_idents;                    // referenced identifiers
    std::set<std::string> element_ref_properties;         // ElementRef-typed members/params
};

struct ServiceInfo {
    std::string class_name;
    std::string file;
    SourceSpan span;
    int start_line = 1;
    int end_line = 1;
    std::vector<std::string> public_methods;
    std::vector<int> injected_into;  // component indices, ascending
    std::map<std::string, std::set<std::string>> method_usage;  // component -> methods
};

struct FileStats {
    FileEntry entry;
    int top_level_decorated_class_count = 0;
    int file_loc = 0;
};

struct GraphEdge {
    int parent = -1;
    int child = -1;
    std::string via_selector;
    SourceSpan usage_span;  // element open tag, template-source relative
    std::vector<tpl::Binding> bindings;
};

struct InputChain {
    std::vector<int> components;  // C0 .. Ck
    std::string input;            // name under which the data enters the chain
    int depth = 0;                // number of edges
    SourceSpan first_edge_span;   // binding site in C0s template
};

struct ProjectModel {
    FrameworkKind framework = FrameworkKind::Unknown;
    std::vector<ts::SyntaxTree> trees;  // sorted by file path
    std::vector<ComponentInfo> components;
    std::vector<ServiceInfo> services;
    std::vector<FileStats> files;
    std::vector<GraphEdge> parent_child;
    std::vector<InputChain> chains;
    std::set<std::string> declared_class_names;  // every class in the project
};

using FileReadFn = std::function<std::optional<std::string>(const std::string& relative_path)>;

struct ResolvedTemplate {
    std::string source;
    TemplateOrigin::Kind origin = TemplateOrigin::Kind::Missing;
    std::string file;
    uint32_t base_offset = 0;
};

// Inline `template` wins over `templateUrl` (with a warning); a missing
// templateUrl target yields an empty template plus a warning.
ResolvedTemplate resolve_template(const ts::ClassDecl& component_class, const FileEntry& file,
                                  const FileReadFn& reader, DiagnosticList& diags);

// Merges per-file parse results into the cross-file model. Deterministic and
// order-insensitive: collections are sorted by class name / path.
ProjectModel build_model(std::vector<ts::SyntaxTree> trees, const FileReadFn& reader,
                         FrameworkKind framework, DiagnosticList& diags);

// Fills model.parent_child from selector/tag matches.
void build_component_graph(ProjectModel& model);

// Fills ServiceInfo::injected_into and method_usage.
void build_injection_graph(ProjectModel& model);

// Fills model.chains. Cycles are cut with a diagnostic.
void trace_input_chains(ProjectModel& model, DiagnosticList& diags);

// build_model + graphs + chains.
ProjectModel build_full_model(std::vector<ts::SyntaxTree> trees, const FileReadFn& reader,
                              FrameworkKind framework, DiagnosticList& diags);

// Maps a template-source span to (file, line span) through an origin.
void template_span_lines(const TemplateOrigin& origin, SourceSpan span, int& start_line,
                         int& end_line);

}  // namespace ngsmell
