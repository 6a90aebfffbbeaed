#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ngsmell/diagnostics.hpp"
#include "ngsmell/scanner.hpp"
#include "ngsmell/source.hpp"

namespace ngsmell::ts {

struct TypeAnnotation {
    std::string text;  // whitespace-normalized source text
    bool is_any = false;        // annotation is exactly `any`
    bool is_any_array = false;  // `any[]` or `Array<any>`
    SourceSpan span;
};

// One explicit any-usage, located where the `any` token sits.
enum class AnySiteKind { Property, Parameter, ReturnType, Variable, Cast, Nested };

struct AnySite {
    AnySiteKind kind = AnySiteKind::Nested;
    std::string subject;  // enclosing property/parameter/method/variable name
    bool is_array = false;
    SourceSpan span;
};

struct DecoratorArgument {
    enum class Kind { StringLit, Ident, Opaque };
    std::string key;  // empty for positional arguments
    Kind kind = Kind::Opaque;
    std::string value;        // literal body / identifier chain / raw slice
    uint32_t value_offset = 0;  // file offset of `value`s first byte (string literals)
    SourceSpan span;
};

struct Decorator {
    std::string name;
    std::vector<DecoratorArgument> arguments;
    SourceSpan span;
};

// `this.a.b.c` or `el.nativeElement...`; is_call marks a trailing `(`.
struct MemberChain {
    std::vector<std::string> segments;  // without the leading `this`
    bool from_this = false;
    bool is_call = false;
    SourceSpan span;
};

// Facts extracted from a statement region (method body, initializer,
// top-level statement). Any-usages are aggregated at SyntaxTree level.
struct BodyInfo {
    int statement_count = 0;
    std::vector<MemberChain> chains;
    std::vector<std::string> idents;  // sorted, unique referenced identifiers
};

struct ParamDecl {
    std::string name;
    std::optional<TypeAnnotation> type;
    bool is_ctor_property = false;  // has an access modifier / readonly
    SourceSpan span;
};

struct PropertyMember {
    std::string name;
    std::vector<Decorator> decorators;
    std::optional<TypeAnnotation> type;
    bool has_initializer = false;
    BodyInfo initializer;
    SourceSpan span;
};

enum class MethodKind { Method, Constructor, Getter, Setter };

struct MethodMember {
    std::string name;
    MethodKind kind = MethodKind::Method;
    std::vector<Decorator> decorators;
    std::vector<ParamDecl> params;
    std::optional<TypeAnnotation> return_type;
    BodyInfo body;
    bool is_private = false;  // private or protected
    SourceSpan span;
};

struct ClassDecl {
    std::string name;
    std::vector<Decorator> decorators;
    std::optional<std::string> extends_target;  // dotted chain, generics stripped
    bool is_abstract = false;
    bool is_exported = false;
    std::vector<PropertyMember> properties;
    std::vector<MethodMember> methods;
    SourceSpan span;        // includes decorators
    SourceSpan class_span;  // excludes decorators
};

struct InterfaceDecl {
    std::string name;
    BodyInfo body;
    SourceSpan span;
};

struct ImportDecl {
    std::string module;
    std::vector<std::string> names;
    SourceSpan span;
};

struct VarDecl {
    std::string name;
    std::optional<TypeAnnotation> type;
    BodyInfo initializer;
    SourceSpan span;
};

struct FunctionDecl {
    std::string name;
    std::vector<ParamDecl> params;
    std::optional<TypeAnnotation> return_type;
    BodyInfo body;
    SourceSpan span;
};

// Anything outside the parsed subset, retained with its span.
struct OpaqueDecl {
    BodyInfo content;
    SourceSpan span;
};

using Decl = std::variant<ImportDecl, ClassDecl, InterfaceDecl, VarDecl, FunctionDecl, OpaqueDecl>;

struct ParseError {
    std::string message;
    int line = 1;
    int column = 1;
};

struct SyntaxTree {
    FileEntry file;
    std::string source;
    LineIndex lines;
    std::vector<Decl> roots;
    std::vector<AnySite> any_sites;  // whole file, ordered by span
    int top_level_decorated_class_count = 0;
};

struct ParseOutcome {
    std::optional<SyntaxTree> tree;
    std::optional<ParseError> error;
};

ParseOutcome parse_typescript(const FileEntry& entry, std::string source, DiagnosticList& diags);

}  // namespace ngsmell::ts
