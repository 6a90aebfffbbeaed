#include "ngsmell/template_ast.hpp"

#include <cctype>

namespace ngsmell::tpl {

namespace {

bool tag_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':';
}

bool attr_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' ||
           c == '.' || c == '$';
}

bool void_tag(const std::string& tag) {
    static const char* kVoid[] = {"area", "base", "br",    "col",   "embed",  "hr",
                                  "img",  "input", "link", "meta", "param",  "source",
                                  "track", "wbr"};
    for (const char* v : kVoid) {
        if (tag == v) return true;
    }
    return false;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Collects `{{ expr }}` interpolations in [begin, end) of text.
void scan_interpolations(std::string_view text, uint32_t base, size_t begin, size_t end,
                         std::vector<Interpolation>& out) {
    size_t p = begin;
    while (p + 1 < end) {
        size_t open = text.find("{{", p);
        if (open == std::string_view::npos || open >= end) break;
        size_t close = text.find("}}", open + 2);
        if (close == std::string_view::npos || close + 2 > end) break;
        Interpolation interp;
        interp.expression = trim(text.substr(open + 2, close - open - 2));
        interp.span = SourceSpan{base + static_cast<uint32_t>(open),
                                 base + static_cast<uint32_t>(close + 2)};
        out.push_back(std::move(interp));
        p = close + 2;
    }
}

}  // namespace

TemplateAst parse_template(std::string source, DiagnosticList& diags,
                           const std::string& file_for_diags) {
    TemplateAst ast;
    ast.source = std::move(source);
    const std::string& src = ast.source;
    LineIndex lines(src);
    const size_t n = src.size();

    std::vector<int> stack;  // open element indices
    auto add_child = [&](int idx) {
        if (stack.empty()) ast.roots.push_back(idx);
        else ast.elements[stack.back()].children.push_back(idx);
    };

    size_t i = 0;
    size_t text_start = 0;
    while (i < n) {
        if (src[i] != '<') {
            ++i;
            continue;
        }
        bool is_comment = src.compare(i, 4, "<!--") == 0;
        bool is_close = i + 1 < n && src[i + 1] == '/';
        bool is_open = i + 1 < n && std::isalpha(static_cast<unsigned char>(src[i + 1]));
        if (!is_comment && !is_close && !is_open) {
            // stray `<` (e.g. inside an interpolation expression): plain text
            ++i;
            continue;
        }
        // text run before this tag
        scan_interpolations(src, 0, text_start, i, ast.interpolations);

        if (is_comment) {
            size_t close = src.find("-->", i + 4);
            i = close == std::string::npos ? n : close + 3;
            text_start = i;
            continue;
        }
        if (is_close) {
            size_t close = src.find('>', i);
            size_t name_end = i + 2;
            while (name_end < n && tag_name_char(src[name_end])) ++name_end;
            std::string tag = src.substr(i + 2, name_end - i - 2);
            // lenient: pop to the matching open tag if present
            for (size_t k = stack.size(); k > 0; --k) {
                if (ast.elements[stack[k - 1]].tag == tag) {
                    stack.resize(k - 1);
                    break;
                }
            }
            i = close == std::string::npos ? n : close + 1;
            text_start = i;
            continue;
        }
        size_t tag_start = i;
        size_t p = i + 1;
        while (p < n && tag_name_char(src[p])) ++p;
        std::string tag = src.substr(i + 1, p - i - 1);

        Element elem;
        elem.tag = tag;
        bool self_closing = false;
        bool closed = false;

        while (p < n) {
            while (p < n && std::isspace(static_cast<unsigned char>(src[p]))) ++p;
            if (p >= n) break;
            if (src[p] == '>') {
                closed = true;
                ++p;
                break;
            }
            if (src[p] == '/' && p + 1 < n && src[p + 1] == '>') {
                self_closing = true;
                closed = true;
                p += 2;
                break;
            }
            if (src[p] == '<') break;  // malformed: next tag starts

            // attribute
            size_t attr_start = p;
            char c = src[p];
            std::string name;
            enum class AttrForm { Plain, Property, Event, TwoWay, Structural, Reference };
            AttrForm form = AttrForm::Plain;
            if (c == '[' && p + 1 < n && src[p + 1] == '(') {
                size_t close = src.find(")]", p + 2);
                if (close == std::string::npos) {
                    warn(diags, file_for_diags, lines.locate(static_cast<uint32_t>(p)).line,
                         "malformed two-way binding skipped");
                    ++p;
                    continue;
                }
                name = src.substr(p + 2, close - p - 2);
                form = AttrForm::TwoWay;
                p = close + 2;
            } else if (c == '[') {
                size_t close = src.find(']', p + 1);
                if (close == std::string::npos) {
                    warn(diags, file_for_diags, lines.locate(static_cast<uint32_t>(p)).line,
                         "malformed property binding skipped");
                    ++p;
                    continue;
                }
                name = src.substr(p + 1, close - p - 1);
                form = AttrForm::Property;
                p = close + 1;
            } else if (c == '(') {
                size_t close = src.find(')', p + 1);
                if (close == std::string::npos) {
                    warn(diags, file_for_diags, lines.locate(static_cast<uint32_t>(p)).line,
                         "malformed event binding skipped");
                    ++p;
                    continue;
                }
                name = src.substr(p + 1, close - p - 1);
                form = AttrForm::Event;
                p = close + 1;
            } else if (c == '*') {
                ++p;
                size_t s = p;
                while (p < n && attr_name_char(src[p])) ++p;
                name = src.substr(s, p - s);
                form = AttrForm::Structural;
            } else if (c == '#') {
                ++p;
                size_t s = p;
                while (p < n && attr_name_char(src[p])) ++p;
                name = src.substr(s, p - s);
                form = AttrForm::Reference;
            } else if (attr_name_char(c)) {
                size_t s = p;
                while (p < n && attr_name_char(src[p])) ++p;
                name = src.substr(s, p - s);
                form = AttrForm::Plain;
            } else {
                warn(diags, file_for_diags, lines.locate(static_cast<uint32_t>(p)).line,
                     "unexpected character in tag skipped");
                ++p;
                continue;
            }

            std::string value;
            size_t value_begin = 0, value_end = 0;
            while (p < n && std::isspace(static_cast<unsigned char>(src[p]))) ++p;
            if (p < n && src[p] == '=') {
                ++p;
                while (p < n && std::isspace(static_cast<unsigned char>(src[p]))) ++p;
                if (p < n && (src[p] == '"' || src[p] == '\'')) {
                    char quote = src[p];
                    size_t close = src.find(quote, p + 1);
                    if (close == std::string::npos) {
                        warn(diags, file_for_diags, lines.locate(static_cast<uint32_t>(p)).line,
                             "unterminated attribute value");
                        close = n - 1;
                    }
                    value_begin = p + 1;
                    value_end = close;
                    value = src.substr(p + 1, close - p - 1);
                    p = close + 1;
                } else {
                    size_t s = p;
                    while (p < n && !std::isspace(static_cast<unsigned char>(src[p])) &&
                           src[p] != '>' && src[p] != '/') {
                        ++p;
                    }
                    value_begin = s;
                    value_end = p;
                    value = src.substr(s, p - s);
                }
            }
            SourceSpan attr_span{static_cast<uint32_t>(attr_start),
                                 static_cast<uint32_t>(p)};
            switch (form) {
                case AttrForm::Property:
                    elem.bindings.push_back(
                        Binding{BindingKind::Property, name, trim(value), attr_span});
                    break;
                case AttrForm::Event:
                    elem.bindings.push_back(
                        Binding{BindingKind::Event, name, trim(value), attr_span});
                    break;
                case AttrForm::TwoWay:
                    elem.bindings.push_back(
                        Binding{BindingKind::TwoWay, name, trim(value), attr_span});
                    break;
                case AttrForm::Structural:
                    elem.directives.push_back(StructuralDirective{name, trim(value), attr_span});
                    break;
                case AttrForm::Reference:
                    elem.references.push_back(name);
                    break;
                case AttrForm::Plain:
                    elem.bindings.push_back(
                        Binding{BindingKind::Attribute, name, value, attr_span});
                    if (value_end > value_begin) {
                        scan_interpolations(src, 0, value_begin, value_end, ast.interpolations);
                    }
                    break;
            }
        }

        if (!closed) {
            warn(diags, file_for_diags, lines.locate(static_cast<uint32_t>(tag_start)).line,
                 "unterminated tag <" + tag + "> skipped");
        }
        elem.span = SourceSpan{static_cast<uint32_t>(tag_start), static_cast<uint32_t>(p)};
        int idx = static_cast<int>(ast.elements.size());
        ast.elements.push_back(std::move(elem));
        add_child(idx);
        if (closed && !self_closing && !void_tag(tag)) stack.push_back(idx);
        i = p;
        text_start = i;
    }
    scan_interpolations(src, 0, text_start, n, ast.interpolations);

    // flatten in document order
    for (const Element& e : ast.elements) {
        for (const Binding& b : e.bindings) ast.bindings.push_back(b);
        for (const StructuralDirective& d : e.directives) ast.structural_directives.push_back(d);
    }
    return ast;
}

}  // namespace ngsmell::tpl
