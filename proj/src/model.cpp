#include "ngsmell/model.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace ngsmell {

namespace {

const ts::Decorator* find_decorator(const std::vector<ts::Decorator>& decorators,
                                    std::string_view name) {
    for (const auto& d : decorators) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

const ts::DecoratorArgument* find_argument(const ts::Decorator& deco, std::string_view key) {
    for (const auto& arg : deco.arguments) {
        if (arg.key == key) return &arg;
    }
    return nullptr;
}

std::string base_type_name(const ts::TypeAnnotation& ann) {
    std::string out;
    for (char c : ann.text) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$') out += c;
        else break;
    }
    return out;
}

std::string dir_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string() : path.substr(0, pos);
}

// Resolves `./x`, `../x` segments against the directory of `from`.
std::string join_relative(const std::string& from_dir, const std::string& target) {
    std::vector<std::string> segs;
    auto push_all = [&](const std::string& p) {
        size_t start = 0;
        while (start <= p.size()) {
            size_t pos = p.find('/', start);
            std::string seg = pos == std::string::npos ? p.substr(start)
                                                       : p.substr(start, pos - start);
            if (seg == "..") {
                if (!segs.empty()) segs.pop_back();
            } else if (!seg.empty() && seg != ".") {
                segs.push_back(seg);
            }
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
    };
    push_all(from_dir);
    push_all(target);
    std::string out;
    for (size_t i = 0; i < segs.size(); ++i) {
        if (i) out += '/';
        out += segs[i];
    }
    return out;
}

// Identifier tokens of a template expression, skipping member names after `.`.
std::vector<std::string> expression_idents(std::string_view expr) {
    std::vector<std::string> out;
    size_t i = 0;
    bool after_dot = false;
    while (i < expr.size()) {
        char c = expr[i];
        if (c == '\'' || c == '"' || c == '`') {
            char quote = c;
            ++i;
            while (i < expr.size() && expr[i] != quote) {
                if (expr[i] == '\\') ++i;
                ++i;
            }
            ++i;
            after_dot = false;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
            size_t s = i;
            while (i < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[i])) ||
                                       expr[i] == '_' || expr[i] == '$')) {
                ++i;
            }
            if (!after_dot) out.push_back(std::string(expr.substr(s, i - s)));
            after_dot = false;
            continue;
        }
        after_dot = c == '.';
        ++i;
    }
    return out;
}

bool is_bare_identifier(std::string_view expr) {
    if (expr.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(expr[0])) || expr[0] == '_' || expr[0] == '$')) {
        return false;
    }
    for (char c : expr) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$')) return false;
    }
    return true;
}

}  // namespace

ResolvedTemplate resolve_template(const ts::ClassDecl& component_class, const FileEntry& file,
                                  const FileReadFn& reader, DiagnosticList& diags) {
    ResolvedTemplate resolved;
    const ts::Decorator* deco = find_decorator(component_class.decorators, "Component");
    if (!deco) return resolved;
    const ts::DecoratorArgument* inline_tpl = find_argument(*deco, "template");
    const ts::DecoratorArgument* url = find_argument(*deco, "templateUrl");
    if (inline_tpl && inline_tpl->kind == ts::DecoratorArgument::Kind::StringLit) {
        if (url) {
            warn(diags, file.path, 0,
                 "component " + component_class.name +
                     " declares both template and templateUrl; inline template wins");
        }
        resolved.source = inline_tpl->value;
        resolved.origin = TemplateOrigin::Kind::Inline;
        resolved.file = file.path;
        resolved.base_offset = inline_tpl->value_offset;
        return resolved;
    }
    if (url && url->kind == ts::DecoratorArgument::Kind::StringLit) {
        std::string target = join_relative(dir_of(file.path), url->value);
        std::optional<std::string> content = reader(target);
        if (!content) {
            warn(diags, file.path, 0,
                 "templateUrl '" + url->value + "' of component " + component_class.name +
                     " not found; analyzing with empty template");
            return resolved;
        }
        resolved.source = std::move(*content);
        resolved.origin = TemplateOrigin::Kind::ExternalFile;
        resolved.file = target;
        resolved.base_offset = 0;
        return resolved;
    }
    warn(diags, file.path, 0,
         "component " + component_class.name + " declares no template; analyzing with empty one");
    return resolved;
}

namespace {

std::string input_bound_name(const ts::Decorator& input_deco, const std::string& property) {
    if (!input_deco.arguments.empty() && input_deco.arguments.front().key.empty() &&
        input_deco.arguments.front().kind == ts::DecoratorArgument::Kind::StringLit) {
        return input_deco.arguments.front().value;
    }
    return property;
}

void collect_member_facts(const ts::ClassDecl& cls, ComponentInfo& info) {
    for (const auto& prop : cls.properties) {
        if (const ts::Decorator* input = find_decorator(prop.decorators, "Input")) {
            info.inputs.push_back(
                InputDecl{prop.name, input_bound_name(*input, prop.name), prop.type, prop.span});
        }
        if (find_decorator(prop.decorators, "Output")) info.outputs.push_back(prop.name);
        if (const ts::Decorator* vc = find_decorator(prop.decorators, "ViewChild")) {
            std::string target;
            if (!vc->arguments.empty()) target = vc->arguments.front().value;
            info.view_children.push_back(ViewChildDecl{prop.name, target, prop.span});
        }
        bool typed_element_ref = prop.type && base_type_name(*prop.type) == "ElementRef";
        bool assigned_element_ref = false;
        for (const auto& ident : prop.initializer.idents) {
            if (ident == "ElementRef") assigned_element_ref = true;
        }
        if (typed_element_ref || assigned_element_ref) {
            info.element_ref_properties.insert(prop.name);
        }
        for (const auto& chain : prop.initializer.chains) info.chains.push_back(chain);
        info.body_idents.insert(prop.initializer.idents.begin(), prop.initializer.idents.end());
    }
    for (const auto& method : cls.methods) {
        if (method.kind == ts::MethodKind::Setter) {
            if (const ts::Decorator* input = find_decorator(method.decorators, "Input")) {
                std::optional<ts::TypeAnnotation> type;
                if (!method.params.empty()) type = method.params.front().type;
                info.inputs.push_back(InputDecl{
                    method.name, input_bound_name(*input, method.name), type, method.span});
            }
        }
        if (method.kind == ts::MethodKind::Method) {
            info.methods.push_back(
                MethodInfo{method.name, method.body.statement_count, method.span});
        }
        if (method.kind == ts::MethodKind::Constructor) {
            for (const auto& param : method.params) {
                if (!param.type) continue;
                std::string type_name = base_type_name(*param.type);
                if (type_name.empty()) continue;
                info.injected.push_back(type_name);
                info.ctor_param_types[param.name] = type_name;
                if (type_name == "ElementRef") info.element_ref_properties.insert(param.name);
            }
        }
        for (const auto& chain : method.body.chains) info.chains.push_back(chain);
        info.body_idents.insert(method.body.idents.begin(), method.body.idents.end());
    }
}

}  // namespace

ProjectModel build_model(std::vector<ts::SyntaxTree> trees, const FileReadFn& reader,
                         FrameworkKind framework, DiagnosticList& diags) {
    ProjectModel model;
    model.framework = framework;
    std::sort(trees.begin(), trees.end(),
              [](const ts::SyntaxTree& a, const ts::SyntaxTree& b) {
                  return a.file.path < b.file.path;
              });
    model.trees = std::move(trees);

    for (size_t ti = 0; ti < model.trees.size(); ++ti) {
        const ts::SyntaxTree& tree = model.trees[ti];
        FileStats stats;
        stats.entry = tree.file;
        stats.top_level_decorated_class_count = tree.top_level_decorated_class_count;
        stats.file_loc = tree.lines.line_count();
        model.files.push_back(std::move(stats));

        int class_index = 0;
        for (const auto& decl : tree.roots) {
            const auto* cls = std::get_if<ts::ClassDecl>(&decl);
            if (!cls) continue;
            int this_class_index = class_index++;
            if (!cls->name.empty()) model.declared_class_names.insert(cls->name);
            const ts::Decorator* component_deco = find_decorator(cls->decorators, "Component");
            const ts::Decorator* injectable_deco = find_decorator(cls->decorators, "Injectable");
            if (component_deco && injectable_deco) {
                warn(diags, tree.file.path, tree.lines.locate(cls->span.begin).line,
                     "class " + cls->name +
                         " carries both Component and Injectable; treated as a component");
            }
            if (component_deco) {
                ComponentInfo info;
                info.class_name = cls->name;
                info.file = tree.file.path;
                info.span = cls->span;
                info.class_span = cls->class_span;
                info.start_line = tree.lines.locate(cls->span.begin).line;
                info.end_line =
                    tree.lines.locate(cls->span.end > 0 ? cls->span.end - 1 : 0).line;
                info.class_decl_start_line = tree.lines.locate(cls->class_span.begin).line;
                info.class_loc = info.end_line - info.start_line + 1;
                info.tree_index = static_cast<int>(ti);
                info.class_index = this_class_index;
                info.extends_target = cls->extends_target;
                info.file_lines = tree.lines;
                if (const auto* sel = find_argument(*component_deco, "selector");
                    sel && sel->kind == ts::DecoratorArgument::Kind::StringLit) {
                    info.selector = sel->value;
                }
                if (const auto* cd = find_argument(*component_deco, "changeDetection")) {
                    if (cd->value.find("OnPush") != std::string::npos) info.onpush = true;
                }
                ResolvedTemplate resolved = resolve_template(*cls, tree.file, reader, diags);
                info.template_origin.kind = resolved.origin;
                info.template_origin.base_offset = resolved.base_offset;
                switch (resolved.origin) {
                    case TemplateOrigin::Kind::Inline:
                        info.template_origin.file = tree.file.path;
                        info.template_origin.lines = tree.lines;
                        break;
                    case TemplateOrigin::Kind::ExternalFile:
                        info.template_origin.file = resolved.file;
                        info.template_origin.lines = LineIndex(resolved.source);
                        break;
                    case TemplateOrigin::Kind::Missing:
                        info.template_origin.file = tree.file.path;
                        info.template_origin.lines = tree.lines;
                        break;
                }
                info.template_ast =
                    tpl::parse_template(std::move(resolved.source), diags,
                                        info.template_origin.file);
                collect_member_facts(*cls, info);
                model.components.push_back(std::move(info));
            } else if (injectable_deco) {
                ServiceInfo info;
                info.class_name = cls->name;
                info.file = tree.file.path;
                info.span = cls->span;
                info.start_line = tree.lines.locate(cls->span.begin).line;
                info.end_line =
                    tree.lines.locate(cls->span.end > 0 ? cls->span.end - 1 : 0).line;
                for (const auto& method : cls->methods) {
                    if (method.kind == ts::MethodKind::Method && !method.is_private) {
                        info.public_methods.push_back(method.name);
                    }
                }
                model.services.push_back(std::move(info));
            }
        }
    }

    std::sort(model.components.begin(), model.components.end(),
              [](const ComponentInfo& a, const ComponentInfo& b) {
                  return std::tie(a.class_name, a.file) < std::tie(b.class_name, b.file);
              });
    std::sort(model.services.begin(), model.services.end(),
              [](const ServiceInfo& a, const ServiceInfo& b) {
                  return std::tie(a.class_name, a.file) < std::tie(b.class_name, b.file);
              });

    // duplicate selector diagnostic
    std::map<std::string, std::vector<std::string>> by_selector;
    for (const auto& comp : model.components) {
        if (comp.selector) by_selector[*comp.selector].push_back(comp.class_name);
    }
    for (const auto& [selector, classes] : by_selector) {
        if (classes.size() > 1) {
            std::string message = "selector '";
            message += selector;
            message += "' declared by: ";
            for (size_t i = 0; i < classes.size(); ++i) {
                if (i) message += ", ";
                message += classes[i];
            }
            warn(diags, "", 0, std::move(message));
        }
    }
    return model;
}

void build_component_graph(ProjectModel& model) {
    model.parent_child.clear();
    std::map<std::string, std::vector<int>> by_selector;
    for (size_t i = 0; i < model.components.size(); ++i) {
        if (model.components[i].selector) {
            by_selector[*model.components[i].selector].push_back(static_cast<int>(i));
        }
    }
    for (size_t parent = 0; parent < model.components.size(); ++parent) {
        const auto& tpl_ast = model.components[parent].template_ast;
        for (const auto& element : tpl_ast.elements) {
            auto it = by_selector.find(element.tag);
            if (it == by_selector.end()) continue;
            for (int child : it->second) {
                GraphEdge edge;
                edge.parent = static_cast<int>(parent);
                edge.child = child;
                edge.via_selector = element.tag;
                edge.usage_span = element.span;
                edge.bindings = element.bindings;
                model.parent_child.push_back(std::move(edge));
            }
        }
    }
}

void build_injection_graph(ProjectModel& model) {
    std::map<std::string, size_t> service_by_name;
    for (size_t i = 0; i < model.services.size(); ++i) {
        service_by_name.emplace(model.services[i].class_name, i);
    }
    for (auto& service : model.services) {
        service.injected_into.clear();
        service.method_usage.clear();
    }
    for (size_t ci = 0; ci < model.components.size(); ++ci) {
        const ComponentInfo& comp = model.components[ci];
        for (const auto& [param_name, type_name] : comp.ctor_param_types) {
            auto it = service_by_name.find(type_name);
            if (it == service_by_name.end()) continue;  // unknown classes ignored
            ServiceInfo& service = model.services[it->second];
            service.injected_into.push_back(static_cast<int>(ci));
            auto& usage = service.method_usage[comp.class_name];
            for (const auto& chain : comp.chains) {
                if (chain.from_this && chain.is_call && chain.segments.size() == 2 &&
                    chain.segments[0] == param_name) {
                    usage.insert(chain.segments[1]);
                }
            }
        }
    }
    for (auto& service : model.services) {
        std::sort(service.injected_into.begin(), service.injected_into.end());
        service.injected_into.erase(
            std::unique(service.injected_into.begin(), service.injected_into.end()),
            service.injected_into.end());
    }
}

namespace {

struct Hop {
    int parent = -1;
    int child = -1;
    std::string input;
    std::string expr;
    SourceSpan span;
};

// True when `component` consumes `name` outside of forwarding bindings:
// method bodies, initializers, interpolations, structural directives, event
// or two-way bindings, and non-bare property bindings.
bool otherwise_references(const ComponentInfo& component, const std::string& name) {
    if (component.body_idents.count(name)) return true;
    const tpl::TemplateAst& ast = component.template_ast;
    for (const auto& interp : ast.interpolations) {
        for (const auto& ident : expression_idents(interp.expression)) {
            if (ident == name) return true;
        }
    }
    for (const auto& directive : ast.structural_directives) {
        for (const auto& ident : expression_idents(directive.expression)) {
            if (ident == name) return true;
        }
    }
    for (const auto& binding : ast.bindings) {
        if (binding.kind == tpl::BindingKind::Attribute) continue;
        if (binding.kind == tpl::BindingKind::Property && binding.expression == name) {
            continue;  // forwarding-shaped binding
        }
        for (const auto& ident : expression_idents(binding.expression)) {
            if (ident == name) return true;
        }
    }
    return false;
}

bool has_input(const ComponentInfo& component, const std::string& property_name) {
    for (const auto& input : component.inputs) {
        if (input.name == property_name) return true;
    }
    return false;
}

// Maps a template-facing binding target (the @Input alias when one exists)
// back to the receiving property name.
const InputDecl* input_by_bound_name(const ComponentInfo& component, const std::string& target) {
    for (const auto& input : component.inputs) {
        if (input.bound_name == target) return &input;
    }
    return nullptr;
}

}  // namespace

void trace_input_chains(ProjectModel& model, DiagnosticList& diags) {
    model.chains.clear();
    std::vector<Hop> hops;
    for (const auto& edge : model.parent_child) {
        const ComponentInfo& child = model.components[edge.child];
        for (const auto& binding : edge.bindings) {
            if (binding.kind != tpl::BindingKind::Property) continue;
            const InputDecl* input = input_by_bound_name(child, binding.target);
            if (!input) continue;
            if (!is_bare_identifier(binding.expression)) continue;
            hops.push_back(
                Hop{edge.parent, edge.child, input->name, binding.expression, binding.span});
        }
    }

    auto continuation_eligible = [&](const Hop& hop) {
        const ComponentInfo& parent = model.components[hop.parent];
        return has_input(parent, hop.expr) && !otherwise_references(parent, hop.expr);
    };
    auto extends_hop = [&](const Hop& next, const Hop& prev) {
        return next.parent == prev.child && next.expr == prev.input &&
               continuation_eligible(next);
    };

    std::vector<char> has_predecessor(hops.size(), 0);
    for (size_t i = 0; i < hops.size(); ++i) {
        for (size_t j = 0; j < hops.size(); ++j) {
            if (i != j && extends_hop(hops[i], hops[j])) {
                has_predecessor[i] = 1;
                break;
            }
        }
    }

    bool cycle_reported = false;
    std::vector<char> reached(hops.size(), 0);

    // Depth-first enumeration of maximal forwarding paths from each start
    // hop; a visited-set bounds cyclic graphs.
    std::vector<size_t> path;
    std::vector<char> on_path(hops.size(), 0);
    std::function<void(size_t)> extend = [&](size_t hop_idx) {
        path.push_back(hop_idx);
        on_path[hop_idx] = 1;
        reached[hop_idx] = 1;
        bool extended = false;
        for (size_t next = 0; next < hops.size(); ++next) {
            if (next == hop_idx || !extends_hop(hops[next], hops[hop_idx])) continue;
            if (on_path[next]) {
                if (!cycle_reported) {
                    warn(diags, model.components[hops[next].parent].file, 0,
                         "component graph cycle broken while tracing input chains at " +
                             model.components[hops[next].parent].class_name);
                    cycle_reported = true;
                }
                continue;
            }
            extended = true;
            extend(next);
        }
        if (!extended) {
            InputChain chain;
            chain.components.push_back(hops[path.front()].parent);
            for (size_t idx : path) chain.components.push_back(hops[idx].child);
            chain.input = hops[path.front()].input;
            chain.depth = static_cast<int>(path.size());
            chain.first_edge_span = hops[path.front()].span;
            model.chains.push_back(std::move(chain));
        }
        on_path[hop_idx] = 0;
        path.pop_back();
    };

    for (size_t i = 0; i < hops.size(); ++i) {
        if (!has_predecessor[i]) extend(i);
    }
    // hops reachable only through cycles
    for (size_t i = 0; i < hops.size(); ++i) {
        if (!reached[i] && !cycle_reported) {
            warn(diags, model.components[hops[i].parent].file, 0,
                 "component graph cycle broken while tracing input chains at " +
                     model.components[hops[i].parent].class_name);
            cycle_reported = true;
        }
    }
}

ProjectModel build_full_model(std::vector<ts::SyntaxTree> trees, const FileReadFn& reader,
                              FrameworkKind framework, DiagnosticList& diags) {
    ProjectModel model = build_model(std::move(trees), reader, framework, diags);
    build_component_graph(model);
    build_injection_graph(model);
    trace_input_chains(model, diags);
    return model;
}

void template_span_lines(const TemplateOrigin& origin, SourceSpan span, int& start_line,
                         int& end_line) {
    start_line = origin.lines.locate(origin.base_offset + span.begin).line;
    uint32_t last = span.end > span.begin ? origin.base_offset + span.end - 1
                                          : origin.base_offset + span.begin;
    end_line = origin.lines.locate(last).line;
}

}  // namespace ngsmell
