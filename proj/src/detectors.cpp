#include "ngsmell/detectors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "ngsmell/ts_lexer.hpp"

namespace ngsmell {

namespace {

Finding make_finding(SmellId smell, std::string file, int start_line, int end_line,
                     std::string subject, std::string message) {
    Finding f;
    f.smell = smell;
    f.file = std::move(file);
    f.start_line = start_line;
    f.end_line = end_line;
    f.subject = std::move(subject);
    f.message = std::move(message);
    f.maturity = maturity_of(smell);
    return f;
}

void span_lines(const LineIndex& lines, SourceSpan span, int& start_line, int& end_line) {
    start_line = lines.locate(span.begin).line;
    end_line = lines.locate(span.end > span.begin ? span.end - 1 : span.begin).line;
}

// Names invoked as calls in a template expression: identifier directly
// followed by `(`, not preceded by `.` (pipe names never carry parens, so
// they are naturally exempt).
std::vector<std::string> called_names(std::string_view expr) {
    std::vector<std::string> out;
    size_t i = 0;
    bool after_dot = false;
    while (i < expr.size()) {
        char c = expr[i];
        if (c == '\'' || c == '"') {
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
            size_t k = i;
            while (k < expr.size() && std::isspace(static_cast<unsigned char>(expr[k]))) ++k;
            if (!after_dot && k < expr.size() && expr[k] == '(') {
                out.push_back(std::string(expr.substr(s, i - s)));
            }
            after_dot = false;
            continue;
        }
        after_dot = c == '.';
        ++i;
    }
    return out;
}

std::string format_fraction(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::vector<Finding> detect_overusing_any(const ts::SyntaxTree& tree, const ThresholdConfig& cfg) {
    std::vector<Finding> findings;
    if (static_cast<int>(tree.any_sites.size()) < cfg.any_min_count) return findings;
    for (const auto& site : tree.any_sites) {
        int start_line = 0, end_line = 0;
        span_lines(tree.lines, site.span, start_line, end_line);
        std::string form = site.is_array ? "any[]" : "any";
        std::string message;
        std::string subject = site.subject;
        switch (site.kind) {
            case ts::AnySiteKind::Property:
                message = "property '" + site.subject + "' is typed " + form;
                break;
            case ts::AnySiteKind::Parameter:
                message = "parameter '" + site.subject + "' is typed " + form;
                break;
            case ts::AnySiteKind::ReturnType:
                message = "return type of '" + site.subject + "' is " + form;
                break;
            case ts::AnySiteKind::Variable:
                message = "variable '" + site.subject + "' is typed " + form;
                break;
            case ts::AnySiteKind::Cast:
                if (subject.empty()) subject = "cast";
                message = "expression cast to " + form +
                          (site.subject.empty() ? "" : " in '" + site.subject + "'");
                break;
            case ts::AnySiteKind::Nested:
                if (subject.empty()) subject = "type";
                message = form + " inside the type annotation" +
                          (site.subject.empty() ? "" : " of '" + site.subject + "'");
                break;
        }
        Finding f = make_finding(SmellId::OverusingAnyType, tree.file.path, start_line, end_line,
                                 std::move(subject), std::move(message));
        f.metadata.emplace_back("file_total", static_cast<int64_t>(tree.any_sites.size()));
        f.metadata.emplace_back("threshold", static_cast<int64_t>(cfg.any_min_count));
        findings.push_back(std::move(f));
    }
    return findings;
}

std::vector<Finding> detect_large_component(const ComponentInfo& component,
                                            const ThresholdConfig& cfg) {
    std::vector<Finding> findings;
    if (component.class_loc <= cfg.large_component_loc) return findings;
    Finding f = make_finding(
        SmellId::LargeComponent, component.file, component.start_line, component.end_line,
        component.class_name,
        "component class spans " + std::to_string(component.class_loc) + " lines (threshold " +
            std::to_string(cfg.large_component_loc) + ")");
    f.metadata.emplace_back("loc", static_cast<int64_t>(component.class_loc));
    f.metadata.emplace_back("threshold", static_cast<int64_t>(cfg.large_component_loc));
    findings.push_back(std::move(f));
    return findings;
}

std::vector<Finding> detect_large_file(const FileStats& stats, const ThresholdConfig& cfg) {
    std::vector<Finding> findings;
    bool by_loc = stats.file_loc > cfg.large_file_loc;
    bool by_classes = !cfg.large_file_loc_only &&
                      stats.top_level_decorated_class_count >= cfg.large_file_min_decorated_classes;
    if (!by_loc && !by_classes) return findings;
    auto slash = stats.entry.path.find_last_of('/');
    std::string name =
        slash == std::string::npos ? stats.entry.path : stats.entry.path.substr(slash + 1);
    std::string message =
        by_loc ? "file spans " + std::to_string(stats.file_loc) + " lines (threshold " +
                     std::to_string(cfg.large_file_loc) + ")"
               : "file declares " + std::to_string(stats.top_level_decorated_class_count) +
                     " decorated classes (threshold " +
                     std::to_string(cfg.large_file_min_decorated_classes) + ")";
    Finding f = make_finding(SmellId::LargeFile, stats.entry.path, 1,
                             std::max(stats.file_loc, 1), std::move(name), std::move(message));
    f.metadata.emplace_back("loc", static_cast<int64_t>(stats.file_loc));
    f.metadata.emplace_back("decorated_classes",
                            static_cast<int64_t>(stats.top_level_decorated_class_count));
    f.metadata.emplace_back("loc_threshold", static_cast<int64_t>(cfg.large_file_loc));
    f.metadata.emplace_back("class_threshold",
                            static_cast<int64_t>(cfg.large_file_min_decorated_classes));
    findings.push_back(std::move(f));
    return findings;
}

std::vector<Finding> detect_inheritance(const ProjectModel& model, const ThresholdConfig&) {
    std::vector<Finding> findings;
    for (const auto& component : model.components) {
        if (!component.extends_target) continue;
        const std::string& target = *component.extends_target;
        if (!model.declared_class_names.count(target)) continue;  // external base exempt
        int end_line = component.end_line;
        Finding f = make_finding(SmellId::InheritanceInsteadOfComposition, component.file,
                                 component.class_decl_start_line, end_line, component.class_name,
                                 "component class extends user-defined " + target);
        f.metadata.emplace_back("base", target);
        findings.push_back(std::move(f));
    }
    return findings;
}

std::vector<Finding> detect_too_many_inputs(const ComponentInfo& component,
                                            const ThresholdConfig& cfg) {
    std::vector<Finding> findings;
    int count = static_cast<int>(component.inputs.size());
    if (count < cfg.too_many_inputs) return findings;
    Finding f = make_finding(
        SmellId::TooManyInputs, component.file, component.start_line, component.end_line,
        component.class_name,
        "component declares " + std::to_string(count) + " @Input properties (threshold " +
            std::to_string(cfg.too_many_inputs) + ")");
    f.metadata.emplace_back("count", static_cast<int64_t>(count));
    f.metadata.emplace_back("threshold", static_cast<int64_t>(cfg.too_many_inputs));
    findings.push_back(std::move(f));
    return findings;
}

std::vector<Finding> detect_inefficient_method_binding(const ComponentInfo& component,
                                                       const ThresholdConfig& cfg) {
    std::vector<Finding> findings;
    if (cfg.exempt_onpush && component.onpush) return findings;
    std::set<std::string> methods;
    for (const auto& m : component.methods) methods.insert(m.name);
    if (methods.empty()) return findings;

    auto report = [&](std::string_view context, const std::string& expression, SourceSpan span) {
        std::string called;
        for (const auto& name : called_names(expression)) {
            if (methods.count(name)) {
                called = name;
                break;
            }
        }
        if (called.empty()) return;
        int start_line = 0, end_line = 0;
        template_span_lines(component.template_origin, span, start_line, end_line);
        Finding f = make_finding(SmellId::InefficientMethodBinding,
                                 component.template_origin.file, start_line, end_line, called,
                                 "template " + std::string(context) + " invokes method " + called +
                                     "() of " + component.class_name);
        f.metadata.emplace_back("expression", expression);
        f.metadata.emplace_back("component", component.class_name);
        findings.push_back(std::move(f));
    };

    for (const auto& interp : component.template_ast.interpolations) {
        report("interpolation", interp.expression, interp.span);
    }
    for (const auto& binding : component.template_ast.bindings) {
        if (binding.kind != tpl::BindingKind::Property) continue;  // event handlers exempt
        report("property binding", binding.expression, binding.span);
    }
    return findings;
}

std::vector<Finding> detect_direct_dom(const ComponentInfo& component, const ThresholdConfig&) {
    std::vector<Finding> findings;
    if (component.element_ref_properties.empty()) return findings;
    for (const auto& chain : component.chains) {
        if (chain.segments.size() < 2) continue;
        if (!component.element_ref_properties.count(chain.segments.front())) continue;
        bool dereferences = false;
        for (size_t i = 1; i < chain.segments.size(); ++i) {
            if (chain.segments[i] == "nativeElement") {
                dereferences = true;
                break;
            }
        }
        if (!dereferences) continue;
        int start_line = 0, end_line = 0;
        span_lines(component.file_lines, chain.span, start_line, end_line);
        Finding f = make_finding(SmellId::DirectDomManipulation, component.file, start_line,
                                 end_line, chain.segments.front(),
                                 "nativeElement dereference on ElementRef '" +
                                     chain.segments.front() + "' in " + component.class_name);
        f.metadata.emplace_back("component", component.class_name);
        findings.push_back(std::move(f));
    }
    return findings;
}

std::vector<Finding> detect_parent_child_communication(const ComponentInfo& component,
                                                       const ThresholdConfig& cfg) {
    std::vector<Finding> findings;
    if (component.view_children.empty()) return findings;
    std::set<std::string> view_child_props;
    for (const auto& vc : component.view_children) view_child_props.insert(vc.property);
    int call_sites = 0;
    for (const auto& chain : component.chains) {
        if (!chain.from_this || !chain.is_call || chain.segments.size() < 2) continue;
        if (!view_child_props.count(chain.segments.front())) continue;
        bool through_native = false;
        for (const auto& seg : chain.segments) {
            if (seg == "nativeElement") through_native = true;  // DOM access, not a child call
        }
        if (through_native) continue;
        ++call_sites;
    }
    if (call_sites < cfg.view_child_min_calls) return findings;
    Finding f = make_finding(
        SmellId::ExcessiveParentChildCommunication, component.file, component.start_line,
        component.end_line, component.class_name,
        std::to_string(call_sites) + " method calls through @ViewChild references (threshold " +
            std::to_string(cfg.view_child_min_calls) + ")");
    f.metadata.emplace_back("call_sites", static_cast<int64_t>(call_sites));
    f.metadata.emplace_back("threshold", static_cast<int64_t>(cfg.view_child_min_calls));
    findings.push_back(std::move(f));
    return findings;
}

namespace {

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    size_t inter = 0;
    for (const auto& x : a) inter += b.count(x);
    size_t uni = a.size() + b.size() - inter;
    return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace

std::vector<Finding> detect_coupled_services(const ServiceInfo& service, const ProjectModel& model,
                                             const ThresholdConfig& cfg) {
    std::vector<Finding> findings;
    int client_count = static_cast<int>(service.injected_into.size());
    if (client_count < cfg.coupled_service_min_components) return findings;
    double max_overlap = 0.0;
    for (size_t i = 0; i < service.injected_into.size(); ++i) {
        for (size_t j = i + 1; j < service.injected_into.size(); ++j) {
            const std::string& a = model.components[service.injected_into[i]].class_name;
            const std::string& b = model.components[service.injected_into[j]].class_name;
            static const std::set<std::string> kEmpty;
            auto ia = service.method_usage.find(a);
            auto ib = service.method_usage.find(b);
            double overlap = jaccard(ia == service.method_usage.end() ? kEmpty : ia->second,
                                     ib == service.method_usage.end() ? kEmpty : ib->second);
            max_overlap = std::max(max_overlap, overlap);
        }
    }
    if (max_overlap > cfg.coupled_service_max_usage_overlap) return findings;
    Finding f = make_finding(
        SmellId::CoupledServices, service.file, service.start_line, service.end_line,
        service.class_name,
        "service injected into " + std::to_string(client_count) +
            " components with disjoint method usage (max overlap " +
            format_fraction(max_overlap) + ")");
    f.metadata.emplace_back("components", static_cast<int64_t>(client_count));
    f.metadata.emplace_back("max_usage_overlap", max_overlap);
    findings.push_back(std::move(f));
    return findings;
}

std::vector<Finding> detect_prop_drilling(const std::vector<InputChain>& chains,
                                          const ProjectModel& model, const ThresholdConfig& cfg) {
    std::vector<Finding> findings;
    for (const auto& chain : chains) {
        if (chain.depth < cfg.prop_drilling_min_depth) continue;
        const ComponentInfo& origin = model.components[chain.components.front()];
        int start_line = 0, end_line = 0;
        template_span_lines(origin.template_origin, chain.first_edge_span, start_line, end_line);
        std::string path;
        for (size_t i = 0; i < chain.components.size(); ++i) {
            if (i) path += " -> ";
            path += model.components[chain.components[i]].class_name;
        }
        Finding f = make_finding(SmellId::PropDrilling, origin.template_origin.file, start_line,
                                 end_line, chain.input,
                                 "input '" + chain.input + "' drilled through " +
                                     std::to_string(chain.depth) + " levels (" + path + ")");
        f.metadata.emplace_back("depth", static_cast<int64_t>(chain.depth));
        f.metadata.emplace_back("path", path);
        f.metadata.emplace_back("threshold", static_cast<int64_t>(cfg.prop_drilling_min_depth));
        findings.push_back(std::move(f));
    }
    return findings;
}

namespace {

// Canonical token stream for similarity: identifiers alpha-renamed in order
// of first occurrence, literals collapsed, punctuation kept. Uses its own
// tokenizer (not the TypeScript lexer) because the stream mixes class source
// with template HTML, where regex heuristics do not apply.
std::vector<std::string> canonical_tokens(const ComponentInfo& component,
                                          const ProjectModel& model) {
    std::string text;
    if (component.tree_index >= 0) {
        const ts::SyntaxTree& tree = model.trees[component.tree_index];
        text = tree.source.substr(component.class_span.begin,
                                  component.class_span.end - component.class_span.begin);
    }
    text += "\n";
    text += component.template_ast.source;

    std::vector<std::string> out;
    std::map<std::string, int> rename;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
            while (i < n && text[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '*') {
            size_t close = text.find("*/", i + 2);
            i = close == std::string::npos ? n : close + 2;
            continue;
        }
        if (c == '\'' || c == '"' || c == '`') {
            char quote = c;
            ++i;
            while (i < n && text[i] != quote) {
                if (text[i] == '\\') ++i;
                ++i;
            }
            if (i < n) ++i;
            out.push_back("$");
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                             text[i] == '_' || text[i] == '.')) {
                ++i;
            }
            out.push_back("0");
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
            size_t s = i;
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                             text[i] == '_' || text[i] == '$')) {
                ++i;
            }
            std::string word = text.substr(s, i - s);
            if (ts::is_ts_keyword(word)) {
                out.push_back(std::move(word));
            } else {
                auto [it, inserted] = rename.emplace(std::move(word),
                                                     static_cast<int>(rename.size()));
                out.push_back("#" + std::to_string(it->second));
            }
            continue;
        }
        static const std::vector<std::string> kOps = {"===", "!==", "=>", "==", "!=", "<=",
                                                      ">=",  "&&",  "||", "??", "?."};
        bool matched = false;
        for (const auto& op : kOps) {
            if (text.compare(i, op.size(), op) == 0) {
                out.push_back(op);
                i += op.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            out.push_back(std::string(1, c));
            ++i;
        }
    }
    return out;
}

size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<size_t> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
    for (size_t i = 1; i <= a.size(); ++i) {
        for (size_t j = 1; j <= b.size(); ++j) {
            curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
        }
        std::swap(prev, curr);
    }
    return prev[b.size()];
}

}  // namespace

double component_similarity(const ComponentInfo& a, const ComponentInfo& b,
                            const ProjectModel& model) {
    std::vector<std::string> ta = canonical_tokens(a, model);
    std::vector<std::string> tb = canonical_tokens(b, model);
    if (ta.empty() && tb.empty()) return 1.0;
    size_t lcs = lcs_length(ta, tb);
    return 2.0 * static_cast<double>(lcs) / static_cast<double>(ta.size() + tb.size());
}

std::vector<Finding> detect_duplicated_component(const ProjectModel& model,
                                                 const ThresholdConfig& cfg) {
    std::vector<Finding> findings;
    // token streams cached per component; a multiset intersection bounds the
    // LCS from above, so pairs that cannot reach the threshold skip the DP
    std::vector<std::vector<std::string>> tokens(model.components.size());
    std::vector<std::map<std::string, int>> histograms(model.components.size());
    for (size_t i = 0; i < model.components.size(); ++i) {
        tokens[i] = canonical_tokens(model.components[i], model);
        for (const auto& token : tokens[i]) ++histograms[i][token];
    }
    // components are sorted by class name, so pair (i, j) with i < j reports
    // the lexicographically smaller class first
    for (size_t i = 0; i < model.components.size(); ++i) {
        for (size_t j = i + 1; j < model.components.size(); ++j) {
            size_t total = tokens[i].size() + tokens[j].size();
            double similarity;
            if (total == 0) {
                similarity = 1.0;
            } else {
                size_t shared = 0;
                for (const auto& [token, count] : histograms[i]) {
                    auto it = histograms[j].find(token);
                    if (it != histograms[j].end()) {
                        shared += static_cast<size_t>(std::min(count, it->second));
                    }
                }
                double bound = 2.0 * static_cast<double>(shared) / static_cast<double>(total);
                if (bound < cfg.duplicate_similarity) continue;
                similarity = tokens[i] == tokens[j]
                                 ? 1.0
                                 : 2.0 * static_cast<double>(lcs_length(tokens[i], tokens[j])) /
                                       static_cast<double>(total);
            }
            if (similarity < cfg.duplicate_similarity) continue;
            const ComponentInfo& first = model.components[i];
            const ComponentInfo& second = model.components[j];
            Finding f = make_finding(
                SmellId::DuplicatedComponent, first.file, first.start_line, first.end_line,
                first.class_name + "/" + second.class_name,
                "components " + first.class_name + " and " + second.class_name +
                    " are structurally similar (similarity " + format_fraction(similarity) +
                    ", threshold " + format_fraction(cfg.duplicate_similarity) + ")");
            f.metadata.emplace_back("similarity", similarity);
            f.metadata.emplace_back("other_file", second.file);
            findings.push_back(std::move(f));
        }
    }
    return findings;
}

std::set<SmellId> dispatch_set(FrameworkKind framework) {
    std::set<SmellId> out;
    if (framework == FrameworkKind::Angular) {
        for (const auto& desc : smell_catalog()) out.insert(desc.id);
        return out;
    }
    // TypeScript-level detectors shared across frameworks; Large Component
    // is skipped outside Angular (component shape differs)
    out.insert(SmellId::OverusingAnyType);
    out.insert(SmellId::LargeFile);
    return out;
}

namespace {

std::vector<Finding> run_one(const ProjectModel& model, const ThresholdConfig& cfg,
                             SmellId smell) {
    std::vector<Finding> findings;
    auto append = [&](std::vector<Finding> more) {
        for (auto& f : more) findings.push_back(std::move(f));
    };
    switch (smell) {
        case SmellId::OverusingAnyType:
            for (const auto& tree : model.trees) append(detect_overusing_any(tree, cfg));
            break;
        case SmellId::LargeComponent:
            for (const auto& c : model.components) append(detect_large_component(c, cfg));
            break;
        case SmellId::LargeFile:
            for (const auto& stats : model.files) append(detect_large_file(stats, cfg));
            break;
        case SmellId::InheritanceInsteadOfComposition:
            append(detect_inheritance(model, cfg));
            break;
        case SmellId::TooManyInputs:
            for (const auto& c : model.components) append(detect_too_many_inputs(c, cfg));
            break;
        case SmellId::InefficientMethodBinding:
            for (const auto& c : model.components) {
                append(detect_inefficient_method_binding(c, cfg));
            }
            break;
        case SmellId::DirectDomManipulation:
            for (const auto& c : model.components) append(detect_direct_dom(c, cfg));
            break;
        case SmellId::ExcessiveParentChildCommunication:
            for (const auto& c : model.components) {
                append(detect_parent_child_communication(c, cfg));
            }
            break;
        case SmellId::CoupledServices:
            for (const auto& s : model.services) append(detect_coupled_services(s, model, cfg));
            break;
        case SmellId::PropDrilling:
            append(detect_prop_drilling(model.chains, model, cfg));
            break;
        case SmellId::DuplicatedComponent:
            append(detect_duplicated_component(model, cfg));
            break;
    }
    return findings;
}

}  // namespace

std::vector<Finding> run_detectors(const ProjectModel& model, const ThresholdConfig& cfg,
                                   const std::set<SmellId>& enabled) {
    std::set<SmellId> active = dispatch_set(model.framework);
    std::vector<Finding> findings;
    for (const auto& desc : smell_catalog()) {
        if (!enabled.count(desc.id) || !active.count(desc.id)) continue;
        auto more = run_one(model, cfg, desc.id);
        for (auto& f : more) findings.push_back(std::move(f));
    }
    sort_findings(findings);
    return findings;
}

std::vector<Finding> run_single_detector(const ProjectModel& model, const ThresholdConfig& cfg,
                                         SmellId smell) {
    std::vector<Finding> findings = run_one(model, cfg, smell);
    sort_findings(findings);
    return findings;
}

}  // namespace ngsmell
