#pragma once

#include <string>
#include <vector>

#include "ngsmell/diagnostics.hpp"
#include "ngsmell/source.hpp"

namespace ngsmell::tpl {

enum class BindingKind { Property, Event, TwoWay, Attribute };

struct Binding {
    BindingKind kind = BindingKind::Attribute;
    std::string target;
    std::string expression;
    SourceSpan span;
};

struct Interpolation {
    std::string expression;
    SourceSpan span;
};

struct StructuralDirective {
    std::string name;  // ngIf, ngFor, ...
    std::string expression;
    SourceSpan span;
};

struct Element {
    std::string tag;
    SourceSpan span;  // the open tag
    std::vector<Binding> bindings;
    std::vector<StructuralDirective> directives;
    std::vector<std::string> references;  // #name template refs
    std::vector<int> children;            // indices into TemplateAst::elements
};

struct TemplateAst {
    std::string source;
    std::vector<Element> elements;
    std::vector<int> roots;
    std::vector<Binding> bindings;  // flattened, document order
    std::vector<Interpolation> interpolations;
    std::vector<StructuralDirective> structural_directives;

    bool empty() const {
        return elements.empty() && interpolations.empty() && bindings.empty();
    }
};

// Lenient HTML scan: malformed fragments are skipped with a warning, never
// fatal.
TemplateAst parse_template(std::string source, DiagnosticList& diags,
                           const std::string& file_for_diags = {});

}  // namespace ngsmell::tpl
