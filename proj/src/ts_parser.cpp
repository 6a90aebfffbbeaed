#include <algorithm>
#include <set>

#include "ngsmell/ts_ast.hpp"
#include "ngsmell/ts_lexer.hpp"

namespace ngsmell::ts {

namespace {

bool is_modifier(std::string_view t) {
    return t == "public" || t == "private" || t == "protected" || t == "readonly" ||
           t == "static" || t == "abstract" || t == "async" || t == "declare" ||
           t == "override";
}

bool is_access_modifier(std::string_view t) {
    return t == "public" || t == "private" || t == "protected" || t == "readonly";
}

bool is_block_keyword(std::string_view t) {
    return t == "if" || t == "for" || t == "while" || t == "switch" || t == "try" ||
           t == "do";
}

// Recursive-descent parser over the full token stream. Statement regions
// (method bodies, initializers, opaque statements) are handled by a token
// walker that extracts member chains, identifier references, and explicit
// any-usages; everything else stays opaque within its span.
class Parser {
public:
    Parser(const FileEntry& entry, std::string source, DiagnosticList& diags)
        : entry_(entry), source_(std::move(source)), diags_(diags) {
        auto lexed = lex_typescript(source_, entry_.path, diags_);
        tokens_ = std::move(lexed.tokens);
        unterminated_template_ = lexed.unterminated_template;
        lines_ = LineIndex(source_);
    }

    ParseOutcome run() {
        ParseOutcome outcome;
        if (unterminated_template_) {
            outcome.error = error_at(0, "unterminated template literal");
            return outcome;
        }
        SyntaxTree tree;
        tree.file = entry_;
        tree.lines = lines_;
        try {
            while (!at_eof()) {
                parse_top_level(tree);
            }
        } catch (const ParseError& e) {
            outcome.error = e;
            return outcome;
        }
        for (const auto& decl : tree.roots) {
            if (const auto* cls = std::get_if<ClassDecl>(&decl)) {
                if (!cls->decorators.empty()) ++tree.top_level_decorated_class_count;
            }
        }
        std::sort(file_sites_.begin(), file_sites_.end(),
                  [](const AnySite& a, const AnySite& b) { return a.span.begin < b.span.begin; });
        tree.any_sites = std::move(file_sites_);
        tree.source = std::move(source_);
        outcome.tree = std::move(tree);
        return outcome;
    }

private:
    // --- token access -------------------------------------------------

    const Token& tok(size_t i) const { return tokens_[std::min(i, tokens_.size() - 1)]; }
    const Token& cur() const { return tok(pos_); }
    const Token& peek(size_t k = 1) const { return tok(pos_ + k); }
    bool at_eof() const { return cur().kind == TokenKind::EndOfFile; }
    bool at(std::string_view t) const { return cur().text == t; }
    void advance() {
        if (pos_ + 1 < tokens_.size()) ++pos_;
    }
    bool eat(std::string_view t) {
        if (at(t)) {
            advance();
            return true;
        }
        return false;
    }

    ParseError error_at(uint32_t offset, std::string message) const {
        LineCol lc = lines_.locate(offset);
        return ParseError{std::move(message), lc.line, lc.column};
    }

    static bool open_bracket(std::string_view t) { return t == "(" || t == "[" || t == "{"; }
    static bool close_bracket(std::string_view t) { return t == ")" || t == "]" || t == "}"; }

    // Skips a balanced bracket group starting at `idx` (which must be an
    // opening bracket or `<`); returns the index just past the close.
    size_t skip_balanced_at(size_t idx) const {
        std::string_view open = tok(idx).text;
        std::string_view close = open == "(" ? ")" : open == "[" ? "]" : open == "{" ? "}" : ">";
        int depth = 0;
        size_t i = idx;
        while (tok(i).kind != TokenKind::EndOfFile) {
            std::string_view t = tok(i).text;
            if (t == open) ++depth;
            else if (t == close && --depth == 0) return i + 1;
            ++i;
        }
        return i;
    }

    void skip_balanced() { pos_ = skip_balanced_at(pos_); }

    SourceSpan span_from(size_t start_idx) const {
        uint32_t begin = tok(start_idx).offset;
        uint32_t end = pos_ > start_idx ? tok(pos_ - 1).end() : begin;
        return SourceSpan{begin, end};
    }

    // --- any-usage rule ------------------------------------------------
    //
    // An explicit any-usage is an `any` token preceded by `:` or `as`, or
    // an `Array<any>` sequence, outside comments and string literals. The
    // structured annotation parser and the statement walker both reduce to
    // this rule so counts match a token-level scan of the file.

    void add_site(AnySiteKind kind, std::string subject, bool is_array, SourceSpan span) {
        file_sites_.push_back(AnySite{kind, std::move(subject), is_array, span});
    }

    // Scans annotation tokens [begin, end) for any-usages. `whole_kind`
    // applies when the whole annotation is any / any[] / Array<any>.
    void collect_annotation_sites(size_t begin, size_t end, AnySiteKind whole_kind,
                                  const std::string& subject) {
        size_t len = end - begin;
        auto text_at = [&](size_t k) { return tok(begin + k).text; };
        if (len == 1 && text_at(0) == "any") {
            add_site(whole_kind, subject, false, SourceSpan{tok(begin).offset, tok(begin).end()});
            return;
        }
        if (len == 3 && text_at(0) == "any" && text_at(1) == "[" && text_at(2) == "]") {
            add_site(whole_kind, subject, true,
                     SourceSpan{tok(begin).offset, tok(begin + 2).end()});
            return;
        }
        if (len == 4 && text_at(0) == "Array" && text_at(1) == "<" && text_at(2) == "any" &&
            text_at(3) == ">") {
            add_site(whole_kind, subject, true,
                     SourceSpan{tok(begin).offset, tok(begin + 3).end()});
            return;
        }
        for (size_t i = begin; i < end; ++i) {
            if (tok(i).text != "any") continue;
            SourceSpan s{tok(i).offset, tok(i).end()};
            if (i == begin) {
                add_site(AnySiteKind::Nested, subject, false, s);
            } else if (tok(i - 1).is(":") || tok(i - 1).is("as")) {
                add_site(AnySiteKind::Nested, subject, false, s);
            } else if (tok(i - 1).is("<") && i >= begin + 2 && tok(i - 2).is("Array")) {
                add_site(AnySiteKind::Nested, subject, true,
                         SourceSpan{tok(i - 2).offset, tok(std::min(i + 1, end - 1)).end()});
            }
        }
    }

    // --- type annotations ----------------------------------------------

    std::string normalize_type_text(size_t begin, size_t end) const {
        std::string out;
        for (size_t i = begin; i < end; ++i) {
            const Token& t = tok(i);
            if (!out.empty() && (t.kind == TokenKind::Ident || t.kind == TokenKind::Number)) {
                char back = out.back();
                if ((back >= 'a' && back <= 'z') || (back >= 'A' && back <= 'Z') ||
                    (back >= '0' && back <= '9') || back == '_' || back == '$') {
                    out += ' ';
                }
            }
            out += std::string(t.text);
        }
        return out;
    }

    bool type_unit(size_t& i) {
        const Token& t = tok(i);
        if (t.is("typeof") || t.is("keyof") || t.is("readonly") || t.is("new") ||
            t.is("infer")) {
            ++i;
            return type_unit(i);
        }
        if (open_bracket(t.text)) {
            i = skip_balanced_at(i);
        } else if (t.kind == TokenKind::String || t.kind == TokenKind::Number ||
                   t.kind == TokenKind::Template) {
            ++i;
        } else if (t.kind == TokenKind::Ident) {
            ++i;
            while (tok(i).is(".") && tok(i + 1).kind == TokenKind::Ident) i += 2;
            if (tok(i).is("<")) i = skip_balanced_at(i);
        } else {
            return false;
        }
        // postfix: array dims / indexed access
        while (tok(i).is("[")) i = skip_balanced_at(i);
        return true;
    }

    // Parses a type at token index `i`; advances past it. Produces the
    // annotation plus any-usage sites.
    std::optional<TypeAnnotation> parse_type_at(size_t& i, AnySiteKind whole_kind,
                                                const std::string& subject) {
        size_t begin = i;
        if (tok(i).is("|") || tok(i).is("&")) ++i;  // leading union/intersection
        if (!type_unit(i)) {
            i = begin;
            return std::nullopt;
        }
        while (tok(i).is("|") || tok(i).is("&")) {
            ++i;
            if (!type_unit(i)) break;
        }
        if (tok(i).is("=>")) {
            ++i;
            type_unit(i);
            while (tok(i).is("[")) i = skip_balanced_at(i);
        }
        if (tok(i).is("is") && tok(i + 1).kind == TokenKind::Ident) {  // type predicate
            ++i;
            type_unit(i);
        }
        TypeAnnotation ann;
        ann.span = SourceSpan{tok(begin).offset, tok(i - 1).end()};
        ann.text = normalize_type_text(begin, i);
        size_t len = i - begin;
        ann.is_any = len == 1 && tok(begin).is("any");
        ann.is_any_array =
            (len == 3 && tok(begin).is("any") && tok(begin + 1).is("[") &&
             tok(begin + 2).is("]")) ||
            (len == 4 && tok(begin).is("Array") && tok(begin + 1).is("<") &&
             tok(begin + 2).is("any") && tok(begin + 3).is(">"));
        collect_annotation_sites(begin, i, whole_kind, subject);
        return ann;
    }

    // --- decorators ------------------------------------------------------

    std::vector<Decorator> parse_decorators() {
        std::vector<Decorator> out;
        while (at("@") && peek().kind == TokenKind::Ident) {
            size_t start = pos_;
            advance();
            std::string name(cur().text);
            advance();
            while (at(".") && peek().kind == TokenKind::Ident) {
                advance();
                name += ".";
                name += std::string(cur().text);
                advance();
            }
            Decorator deco;
            deco.name = std::move(name);
            if (at("(")) {
                size_t close = skip_balanced_at(pos_);
                parse_decorator_args(pos_ + 1, close - 1, deco);
                pos_ = close;
            }
            deco.span = span_from(start);
            out.push_back(std::move(deco));
        }
        return out;
    }

    DecoratorArgument make_value_argument(size_t& i, size_t limit, std::string key) {
        DecoratorArgument arg;
        arg.key = std::move(key);
        size_t start = i;
        const Token& t = tok(i);
        if (t.kind == TokenKind::String || t.kind == TokenKind::Template) {
            arg.kind = DecoratorArgument::Kind::StringLit;
            std::string_view body = t.text;
            size_t strip = body.size() >= 2 ? 1 : 0;
            arg.value = std::string(body.substr(strip, body.size() - 2 * strip));
            arg.value_offset = t.offset + static_cast<uint32_t>(strip);
            ++i;
        } else if (t.kind == TokenKind::Ident && !tok(i + 1).is("(") && !open_bracket(t.text)) {
            arg.kind = DecoratorArgument::Kind::Ident;
            std::string chain(t.text);
            ++i;
            while (tok(i).is(".") && tok(i + 1).kind == TokenKind::Ident) {
                chain += ".";
                chain += std::string(tok(i + 1).text);
                i += 2;
            }
            arg.value = std::move(chain);
        } else {
            arg.kind = DecoratorArgument::Kind::Opaque;
            int depth = 0;
            while (i < limit) {
                std::string_view tt = tok(i).text;
                if (open_bracket(tt)) ++depth;
                else if (close_bracket(tt)) --depth;
                else if ((tt == "," ) && depth == 0) break;
                ++i;
            }
            arg.value = std::string(source_.substr(tok(start).offset,
                                                   tok(i - 1).end() - tok(start).offset));
        }
        arg.span = SourceSpan{tok(start).offset, i > start ? tok(i - 1).end() : tok(start).end()};
        return arg;
    }

    void parse_decorator_args(size_t begin, size_t end, Decorator& deco) {
        if (begin >= end) return;
        size_t i = begin;
        if (tok(i).is("{")) {
            // options object: parse key/value entries
            size_t obj_end = skip_balanced_at(i) - 1;
            ++i;
            while (i < obj_end) {
                if (tok(i).is(",")) {
                    ++i;
                    continue;
                }
                std::string key;
                if (tok(i).kind == TokenKind::Ident) {
                    key = std::string(tok(i).text);
                } else if (tok(i).kind == TokenKind::String) {
                    std::string_view body = tok(i).text;
                    key = std::string(body.substr(1, body.size() - 2));
                } else {
                    ++i;
                    continue;
                }
                ++i;
                if (tok(i).is(":")) {
                    ++i;
                    // value runs to the next depth-0 comma
                    if (tok(i).kind == TokenKind::String || tok(i).kind == TokenKind::Template ||
                        (tok(i).kind == TokenKind::Ident && !open_bracket(tok(i + 1).text))) {
                        size_t probe = i;
                        DecoratorArgument arg = make_value_argument(probe, obj_end, key);
                        // idents/strings followed by more tokens before the comma
                        // are not simple values; fall back to opaque
                        if (probe < obj_end && !tok(probe).is(",")) {
                            arg.kind = DecoratorArgument::Kind::Opaque;
                            int depth = 0;
                            size_t j = i;
                            while (j < obj_end) {
                                std::string_view tt = tok(j).text;
                                if (open_bracket(tt)) ++depth;
                                else if (close_bracket(tt)) --depth;
                                else if (tt == "," && depth == 0) break;
                                ++j;
                            }
                            arg.value = std::string(source_.substr(
                                tok(i).offset, tok(j - 1).end() - tok(i).offset));
                            arg.span = SourceSpan{tok(i).offset, tok(j - 1).end()};
                            probe = j;
                        }
                        deco.arguments.push_back(std::move(arg));
                        i = probe;
                    } else {
                        size_t start = i;
                        int depth = 0;
                        while (i < obj_end) {
                            std::string_view tt = tok(i).text;
                            if (open_bracket(tt)) ++depth;
                            else if (close_bracket(tt)) --depth;
                            else if (tt == "," && depth == 0) break;
                            ++i;
                        }
                        DecoratorArgument arg;
                        arg.key = key;
                        arg.kind = DecoratorArgument::Kind::Opaque;
                        arg.value = std::string(
                            source_.substr(tok(start).offset, tok(i - 1).end() - tok(start).offset));
                        arg.span = SourceSpan{tok(start).offset, tok(i - 1).end()};
                        deco.arguments.push_back(std::move(arg));
                    }
                } else {
                    // shorthand { foo }
                    DecoratorArgument arg;
                    arg.key = key;
                    arg.kind = DecoratorArgument::Kind::Ident;
                    arg.value = key;
                    arg.span = SourceSpan{tok(i - 1).offset, tok(i - 1).end()};
                    deco.arguments.push_back(std::move(arg));
                }
            }
            return;
        }
        // positional arguments
        while (i < end) {
            if (tok(i).is(",")) {
                ++i;
                continue;
            }
            deco.arguments.push_back(make_value_argument(i, end, ""));
            if (i < end && !tok(i).is(",")) {
                // make_value_argument stopped mid-expression; skip to comma
                int depth = 0;
                while (i < end) {
                    std::string_view tt = tok(i).text;
                    if (open_bracket(tt)) ++depth;
                    else if (close_bracket(tt)) --depth;
                    else if (tt == "," && depth == 0) break;
                    ++i;
                }
            }
        }
    }

    // --- statement walker ------------------------------------------------

    void merge_idents(std::set<std::string>& idents, BodyInfo& info) {
        info.idents.assign(idents.begin(), idents.end());
    }

    // Extracts chains / identifier refs / any-usages from [begin, end).
    BodyInfo walk_region(size_t begin, size_t end, const std::string& subject) {
        BodyInfo info;
        std::set<std::string> idents;
        walk_into(begin, end, subject, info, idents);
        merge_idents(idents, info);
        return info;
    }

    void walk_into(size_t begin, size_t end, const std::string& subject, BodyInfo& info,
                   std::set<std::string>& idents) {
        int depth = 0;
        size_t i = begin;
        while (i < end) {
            const Token& t = tok(i);
            if (t.kind == TokenKind::Punct) {
                if (t.is("(")) {
                    size_t after = try_arrow_params(i, end, subject, info, idents);
                    if (after != i) {
                        i = after;
                        continue;
                    }
                }
                if (open_bracket(t.text)) ++depth;
                else if (close_bracket(t.text)) --depth;
                else if (t.is(";") && depth == 0) ++info.statement_count;
                ++i;
                continue;
            }
            if (t.kind == TokenKind::Template) {
                scan_template_substitutions(t, info, idents);
                ++i;
                continue;
            }
            if (t.kind != TokenKind::Ident) {
                ++i;
                continue;
            }
            // identifier-ish token
            if (t.is("as") && tok(i + 1).is("any")) {
                bool arr = tok(i + 2).is("[") && tok(i + 3).is("]");
                uint32_t end_off = arr ? tok(i + 3).end() : tok(i + 1).end();
                add_site(AnySiteKind::Cast, subject, arr,
                         SourceSpan{tok(i + 1).offset, end_off});
                i += arr ? 4 : 2;
                continue;
            }
            if (t.is("Array") && tok(i + 1).is("<") && tok(i + 2).is("any") &&
                tok(i + 3).is(">")) {
                add_site(AnySiteKind::Nested, subject, true,
                         SourceSpan{t.offset, tok(i + 3).end()});
                i += 4;
                continue;
            }
            if (t.is("any") && i > begin && (tok(i - 1).is(":") || tok(i - 1).is("as"))) {
                add_site(AnySiteKind::Nested, subject, false, SourceSpan{t.offset, t.end()});
                ++i;
                continue;
            }
            if (t.is("const") || t.is("let") || t.is("var")) {
                ++i;
                if (tok(i).kind == TokenKind::Ident && !is_ts_keyword(tok(i).text)) {
                    std::string var_name(tok(i).text);
                    ++i;
                    if (tok(i).is("!") || tok(i).is("?")) ++i;
                    if (tok(i).is(":")) {
                        ++i;
                        parse_type_at(i, AnySiteKind::Variable, var_name);
                    }
                }
                // initializer tokens are walked by the main loop; the
                // terminating `;` counts the statement
                continue;
            }
            if (t.is("function")) {
                ++i;
                std::string fn_name = "function";
                if (tok(i).kind == TokenKind::Ident && !tok(i).is("(")) {
                    fn_name = std::string(tok(i).text);
                    ++i;
                }
                if (tok(i).is("<")) i = skip_balanced_at(i);
                if (tok(i).is("(")) {
                    size_t close = skip_balanced_at(i) - 1;
                    scan_param_annotations(i + 1, close, info, idents);
                    i = close + 1;
                    if (tok(i).is(":")) {
                        ++i;
                        parse_type_at(i, AnySiteKind::ReturnType, fn_name);
                    }
                }
                continue;
            }
            if (is_block_keyword(t.text)) {
                if (depth == 0) ++info.statement_count;
                ++i;
                continue;
            }
            size_t step = walk_one(i, info, idents);
            i = step;
        }
    }

    // Walks one identifier-led construct (chain / reference); returns index
    // past it. Falls back to advancing one token.
    size_t walk_one(size_t i, BodyInfo& info, std::set<std::string>& idents) {
        const Token& t = tok(i);
        if (t.kind == TokenKind::Template) {
            scan_template_substitutions(t, info, idents);
            return i + 1;
        }
        if (t.kind != TokenKind::Ident) return i + 1;
        if (i > 0 && (tok(i - 1).is(".") || tok(i - 1).is("?."))) return i + 1;  // member name
        bool from_this = t.is("this");
        if (!from_this && is_ts_keyword(t.text)) return i + 1;
        MemberChain chain;
        chain.from_this = from_this;
        uint32_t start_off = t.offset;
        uint32_t end_off = t.end();
        if (!from_this) chain.segments.push_back(std::string(t.text));
        size_t j = i;
        while ((tok(j + 1).is(".") || tok(j + 1).is("?.")) && tok(j + 2).kind == TokenKind::Ident) {
            chain.segments.push_back(std::string(tok(j + 2).text));
            end_off = tok(j + 2).end();
            j += 2;
        }
        chain.is_call = tok(j + 1).is("(");
        chain.span = SourceSpan{start_off, end_off};
        if (!chain.segments.empty()) {
            idents.insert(chain.segments.front());
            if (from_this || chain.segments.size() >= 2 || chain.is_call) {
                info.chains.push_back(std::move(chain));
            }
        }
        return j + 1;
    }

    // Looks ahead from an opening paren for `(params) [: type] =>`; when it
    // is an arrow function, parses the parameter annotations and returns the
    // index of the `=>` token. Otherwise returns `i` unchanged.
    size_t try_arrow_params(size_t i, size_t end, const std::string& subject, BodyInfo& info,
                            std::set<std::string>& idents) {
        size_t close = skip_balanced_at(i) - 1;
        if (close >= end || !tok(close).is(")")) return i;
        size_t after = close + 1;
        if (tok(after).is(":")) {
            size_t probe = after + 1;
            if (!type_unit(probe)) return i;
            while (tok(probe).is("|") || tok(probe).is("&")) {
                ++probe;
                if (!type_unit(probe)) break;
            }
            if (!tok(probe).is("=>")) return i;
            scan_param_annotations(i + 1, close, info, idents);
            size_t ret = after + 1;
            parse_type_at(ret, AnySiteKind::ReturnType, subject);
            return ret;
        }
        if (!tok(after).is("=>")) return i;
        scan_param_annotations(i + 1, close, info, idents);
        return after;
    }

    // Parameter list region scan: `name [?] : type [= default]` entries.
    void scan_param_annotations(size_t begin, size_t end, BodyInfo& info,
                                std::set<std::string>& idents) {
        size_t i = begin;
        int depth = 0;
        while (i < end) {
            const Token& t = tok(i);
            if (open_bracket(t.text)) {
                ++depth;
                ++i;
                continue;
            }
            if (close_bracket(t.text)) {
                --depth;
                ++i;
                continue;
            }
            if (depth == 0 && t.kind == TokenKind::Ident && !is_ts_keyword(t.text)) {
                std::string pname(t.text);
                size_t j = i + 1;
                if (tok(j).is("?")) ++j;
                if (tok(j).is(":")) {
                    ++j;
                    parse_type_at(j, AnySiteKind::Parameter, pname);
                    i = j;
                    continue;
                }
            }
            size_t step = walk_one(i, info, idents);
            i = step;
        }
    }

    // Lexes `${ ... }` substitution regions of a template literal and
    // extracts identifier references / chains (no any-usages: string
    // regions are out of scope for the any rule).
    void scan_template_substitutions(const Token& t, BodyInfo& info,
                                     std::set<std::string>& idents) {
        std::string_view body = t.text;
        size_t p = 0;
        while ((p = body.find("${", p)) != std::string_view::npos) {
            size_t q = p + 2;
            int depth = 1;
            while (q < body.size() && depth > 0) {
                if (body[q] == '{') ++depth;
                else if (body[q] == '}') --depth;
                ++q;
            }
            std::string_view inner = body.substr(p + 2, q - p - 3);
            DiagnosticList scratch;
            auto lexed = lex_typescript(inner, entry_.path, scratch);
            for (size_t k = 0; k + 1 < lexed.tokens.size(); ++k) {
                const Token& it = lexed.tokens[k];
                if (it.kind != TokenKind::Ident) continue;
                if (k > 0 && (lexed.tokens[k - 1].is(".") || lexed.tokens[k - 1].is("?."))) continue;
                if (it.is("this")) {
                    MemberChain chain;
                    chain.from_this = true;
                    size_t m = k;
                    while (lexed.tokens[m + 1].is(".") &&
                           lexed.tokens[m + 2].kind == TokenKind::Ident) {
                        chain.segments.push_back(std::string(lexed.tokens[m + 2].text));
                        m += 2;
                    }
                    chain.is_call = lexed.tokens[m + 1].is("(");
                    chain.span = SourceSpan{t.offset, t.end()};
                    if (!chain.segments.empty()) {
                        idents.insert(chain.segments.front());
                        info.chains.push_back(std::move(chain));
                    }
                } else if (!is_ts_keyword(it.text)) {
                    idents.insert(std::string(it.text));
                }
            }
            p = q;
        }
    }

    // --- declarations ------------------------------------------------------

    void parse_top_level(SyntaxTree& tree) {
        size_t start = pos_;
        std::vector<Decorator> decorators = parse_decorators();
        bool exported = false;
        bool is_abstract = false;
        while (cur().kind == TokenKind::Ident) {
            if (at("export")) {
                exported = true;
                advance();
                if (at("default")) advance();
                continue;
            }
            if (at("abstract") && (peek().is("class"))) {
                is_abstract = true;
                advance();
                continue;
            }
            if (at("declare")) {
                advance();
                continue;
            }
            break;
        }
        if (at("class")) {
            tree.roots.push_back(parse_class(std::move(decorators), start, exported, is_abstract));
            return;
        }
        if (!decorators.empty()) {
            // decorator on a non-class construct: keep opaque
            OpaqueDecl op;
            consume_opaque_statement(op);
            op.span = span_from(start);
            tree.roots.push_back(std::move(op));
            return;
        }
        if (at("interface")) {
            tree.roots.push_back(parse_interface(start));
            return;
        }
        if (at("import")) {
            tree.roots.push_back(parse_import(start));
            return;
        }
        if (at("function") || (at("async") && peek().is("function"))) {
            tree.roots.push_back(parse_function(start));
            return;
        }
        if (at("const") || at("let") || at("var")) {
            tree.roots.push_back(parse_var(start));
            return;
        }
        OpaqueDecl op;
        consume_opaque_statement(op);
        op.span = span_from(start);
        tree.roots.push_back(std::move(op));
    }

    void consume_opaque_statement(OpaqueDecl& op) {
        size_t begin = pos_;
        if (at("{")) {
            size_t close = skip_balanced_at(pos_);
            op.content = walk_region(pos_ + 1, close - 1, "");
            pos_ = close;
            return;
        }
        int depth = 0;
        while (!at_eof()) {
            std::string_view t = cur().text;
            if (t == "{" && depth == 0) {
                // block-shaped statement (enum, namespace, if, ...): consume
                // the balanced block and stop
                skip_balanced();
                break;
            }
            if (open_bracket(t)) ++depth;
            else if (close_bracket(t)) {
                if (depth == 0) break;
                --depth;
            } else if (t == ";" && depth == 0) {
                advance();
                break;
            }
            advance();
        }
        if (pos_ == begin) advance();  // always make progress
        op.content = walk_region(begin, pos_, "");
    }

    Decl parse_import(size_t start) {
        ImportDecl imp;
        advance();  // import
        while (!at_eof() && !at(";")) {
            const Token& t = cur();
            if (t.kind == TokenKind::String) {
                std::string_view body = t.text;
                imp.module = std::string(body.substr(1, body.size() - 2));
                advance();
                break;
            }
            if (t.kind == TokenKind::Ident && !t.is("from") && !t.is("type") && !t.is("as")) {
                // local binding name unless aliased away by `as`
                if (peek().is("as") && peek(2).kind == TokenKind::Ident) {
                    imp.names.push_back(std::string(peek(2).text));
                    advance();
                    advance();
                    advance();
                    continue;
                }
                imp.names.push_back(std::string(t.text));
            }
            advance();
        }
        eat(";");
        imp.span = span_from(start);
        return imp;
    }

    Decl parse_interface(size_t start) {
        InterfaceDecl decl;
        advance();  // interface
        if (cur().kind == TokenKind::Ident) {
            decl.name = std::string(cur().text);
            advance();
        }
        if (at("<")) skip_balanced();
        while (!at_eof() && !at("{")) advance();
        if (at("{")) {
            size_t close = skip_balanced_at(pos_);
            decl.body = walk_region(pos_ + 1, close - 1, decl.name);
            pos_ = close;
        }
        decl.span = span_from(start);
        return decl;
    }

    Decl parse_var(size_t start) {
        VarDecl decl;
        advance();  // const/let/var
        if (cur().kind == TokenKind::Ident && !is_ts_keyword(cur().text)) {
            decl.name = std::string(cur().text);
            advance();
        } else if (open_bracket(cur().text)) {
            skip_balanced();  // destructuring
        }
        if (at("!") || at("?")) advance();
        if (at(":")) {
            advance();
            size_t i = pos_;
            decl.type = parse_type_at(i, AnySiteKind::Variable, decl.name);
            pos_ = i;
        }
        size_t init_begin = pos_;
        int depth = 0;
        while (!at_eof()) {
            std::string_view t = cur().text;
            if (open_bracket(t)) ++depth;
            else if (close_bracket(t)) {
                if (depth == 0) break;
                --depth;
            } else if (t == ";" && depth == 0) {
                break;
            }
            advance();
        }
        decl.initializer = walk_region(init_begin, pos_, decl.name);
        eat(";");
        decl.span = span_from(start);
        return decl;
    }

    Decl parse_function(size_t start) {
        FunctionDecl decl;
        eat("async");
        advance();  // function
        eat("*");
        if (cur().kind == TokenKind::Ident && !at("(")) {
            decl.name = std::string(cur().text);
            advance();
        }
        if (at("<")) skip_balanced();
        if (at("(")) {
            size_t close = skip_balanced_at(pos_);
            size_t i = pos_ + 1;
            decl.params = parse_param_list(i, close - 1, decl.body);
            pos_ = close;
        }
        if (at(":")) {
            advance();
            size_t i = pos_;
            decl.return_type = parse_type_at(i, AnySiteKind::ReturnType, decl.name);
            pos_ = i;
        }
        if (at("{")) {
            size_t close = skip_balanced_at(pos_);
            BodyInfo body = walk_region(pos_ + 1, close - 1, decl.name);
            merge_body(decl.body, body);
            pos_ = close;
        } else {
            eat(";");
        }
        decl.span = span_from(start);
        return decl;
    }

    static void merge_body(BodyInfo& into, BodyInfo& from) {
        into.statement_count += from.statement_count;
        for (auto& c : from.chains) into.chains.push_back(std::move(c));
        std::set<std::string> merged(into.idents.begin(), into.idents.end());
        merged.insert(from.idents.begin(), from.idents.end());
        into.idents.assign(merged.begin(), merged.end());
    }

    // Structured parameter list (methods / constructors / functions):
    // decorators, modifiers, name, optional type, optional default.
    std::vector<ParamDecl> parse_param_list(size_t i, size_t end, BodyInfo& extras) {
        std::vector<ParamDecl> params;
        std::set<std::string> idents(extras.idents.begin(), extras.idents.end());
        while (i < end) {
            if (tok(i).is(",")) {
                ++i;
                continue;
            }
            ParamDecl param;
            size_t pstart = i;
            while (tok(i).is("@") && tok(i + 1).kind == TokenKind::Ident) {
                // parameter decorator, e.g. @Inject(TOKEN)
                i += 2;
                if (tok(i).is("(")) i = skip_balanced_at(i);
            }
            while (tok(i).kind == TokenKind::Ident && is_access_modifier(tok(i).text) &&
                   tok(i + 1).kind == TokenKind::Ident) {
                param.is_ctor_property = true;
                ++i;
            }
            if (tok(i).is("...")) ++i;
            if (open_bracket(tok(i).text)) {
                i = skip_balanced_at(i);  // destructured parameter
            } else if (tok(i).kind == TokenKind::Ident) {
                param.name = std::string(tok(i).text);
                ++i;
            } else {
                ++i;
                continue;
            }
            if (tok(i).is("?")) ++i;
            if (tok(i).is(":")) {
                ++i;
                param.type = parse_type_at(i, AnySiteKind::Parameter, param.name);
            }
            if (tok(i).is("=")) {
                ++i;
                size_t dstart = i;
                int depth = 0;
                while (i < end) {
                    std::string_view tt = tok(i).text;
                    if (open_bracket(tt)) ++depth;
                    else if (close_bracket(tt)) --depth;
                    else if (tt == "," && depth == 0) break;
                    ++i;
                }
                walk_into(dstart, i, param.name, extras, idents);
            }
            param.span = SourceSpan{tok(pstart).offset, tok(i > pstart ? i - 1 : pstart).end()};
            params.push_back(std::move(param));
        }
        extras.idents.assign(idents.begin(), idents.end());
        return params;
    }

    Decl parse_class(std::vector<Decorator> decorators, size_t start, bool exported,
                     bool is_abstract) {
        ClassDecl cls;
        cls.decorators = std::move(decorators);
        cls.is_exported = exported;
        cls.is_abstract = is_abstract;
        size_t class_kw = pos_;
        // class_span starts at the modifier closest to the `class` keyword
        size_t class_span_start = class_kw;
        while (class_span_start > start && tok(class_span_start - 1).kind == TokenKind::Ident &&
               (tok(class_span_start - 1).is("export") || tok(class_span_start - 1).is("abstract") ||
                tok(class_span_start - 1).is("default") || tok(class_span_start - 1).is("declare"))) {
            --class_span_start;
        }
        advance();  // class
        if (cur().kind == TokenKind::Ident) {
            cls.name = std::string(cur().text);
            advance();
        }
        if (at("<")) skip_balanced();
        if (eat("extends")) {
            std::string target;
            if (cur().kind == TokenKind::Ident) {
                target = std::string(cur().text);
                advance();
                while (at(".") && peek().kind == TokenKind::Ident) {
                    advance();
                    target += ".";
                    target += std::string(cur().text);
                    advance();
                }
                if (at("<")) skip_balanced();
                if (at("(")) skip_balanced();  // mixin call
            }
            if (!target.empty()) cls.extends_target = target;
        }
        if (eat("implements")) {
            while (!at_eof() && !at("{") && !at("extends")) advance();
        }
        while (!at_eof() && !at("{")) advance();
        if (!at("{")) {
            throw error_at(tok(class_kw).offset, "class body expected");
        }
        size_t body_close = skip_balanced_at(pos_);
        if (tok(body_close - 1).kind == TokenKind::EndOfFile ||
            !tok(body_close - 1).is("}")) {
            throw error_at(tok(class_kw).offset, "unterminated class body");
        }
        advance();  // {
        while (pos_ < body_close - 1) {
            parse_member(cls);
        }
        pos_ = body_close;
        cls.span = span_from(start);
        cls.class_span = SourceSpan{tok(class_span_start).offset, cls.span.end};
        return cls;
    }

    void parse_member(ClassDecl& cls) {
        if (at(";")) {
            advance();
            return;
        }
        size_t start = pos_;
        std::vector<Decorator> decorators = parse_decorators();
        bool saw_private = false;
        while (cur().kind == TokenKind::Ident && is_modifier(cur().text)) {
            // a modifier word directly followed by (, :, =, ; or ? is a name
            std::string_view next = peek().text;
            if (next == "(" || next == ":" || next == "=" || next == ";" || next == "?" ||
                next == "!" || next == "<") {
                break;
            }
            if (at("private") || at("protected")) saw_private = true;
            advance();
        }
        MethodKind kind = MethodKind::Method;
        std::string name;
        if (at("constructor")) {
            kind = MethodKind::Constructor;
            name = "constructor";
            advance();
        } else if ((at("get") || at("set")) &&
                   (peek().kind == TokenKind::Ident || peek().kind == TokenKind::String) &&
                   !peek().is("(")) {
            kind = at("get") ? MethodKind::Getter : MethodKind::Setter;
            advance();
            name = std::string(cur().text);
            advance();
        } else {
            eat("*");
            if (cur().kind == TokenKind::Ident) {
                name = std::string(cur().text);
                advance();
            } else if (cur().kind == TokenKind::String) {
                std::string_view body = cur().text;
                name = std::string(body.substr(1, body.size() - 2));
                advance();
            } else if (at("[")) {
                name = "<computed>";
                skip_balanced();
            } else {
                advance();  // unknown: make progress
                return;
            }
        }
        if (at("?") || at("!")) advance();
        if (at("<")) skip_balanced();
        if (at("(")) {
            MethodMember method;
            method.name = std::move(name);
            method.kind = kind;
            method.is_private = saw_private;
            method.decorators = std::move(decorators);
            size_t close = skip_balanced_at(pos_);
            size_t i = pos_ + 1;
            method.params = parse_param_list(i, close - 1, method.body);
            pos_ = close;
            if (at(":")) {
                advance();
                size_t ri = pos_;
                method.return_type = parse_type_at(ri, AnySiteKind::ReturnType, method.name);
                pos_ = ri;
            }
            if (at("{")) {
                size_t body_close = skip_balanced_at(pos_);
                BodyInfo body = walk_region(pos_ + 1, body_close - 1, method.name);
                merge_body(method.body, body);
                pos_ = body_close;
            } else {
                eat(";");  // abstract / overload signature
            }
            method.span = span_from(start);
            cls.methods.push_back(std::move(method));
            return;
        }
        PropertyMember prop;
        prop.name = std::move(name);
        prop.decorators = std::move(decorators);
        if (at(":")) {
            advance();
            size_t i = pos_;
            prop.type = parse_type_at(i, AnySiteKind::Property, prop.name);
            pos_ = i;
        }
        if (at("=")) {
            advance();
            prop.has_initializer = true;
            size_t init_begin = pos_;
            int depth = 0;
            while (!at_eof()) {
                std::string_view t = cur().text;
                if (open_bracket(t)) ++depth;
                else if (close_bracket(t)) {
                    if (depth == 0) break;  // class closing brace
                    --depth;
                } else if (t == ";" && depth == 0) {
                    break;
                }
                advance();
            }
            prop.initializer = walk_region(init_begin, pos_, prop.name);
        }
        eat(";");
        prop.span = span_from(start);
        cls.properties.push_back(std::move(prop));
    }

    const FileEntry& entry_;
    std::string source_;
    DiagnosticList& diags_;
    std::vector<Token> tokens_;
    bool unterminated_template_ = false;
    LineIndex lines_;
    size_t pos_ = 0;
    std::vector<AnySite> file_sites_;
};

}  // namespace

ParseOutcome parse_typescript(const FileEntry& entry, std::string source, DiagnosticList& diags) {
    if (!is_valid_utf8(source)) {
        ParseOutcome outcome;
        outcome.error = ParseError{"invalid UTF-8", 1, 1};
        return outcome;
    }
    Parser parser(entry, std::move(source), diags);
    return parser.run();
}

}  // namespace ngsmell::ts
