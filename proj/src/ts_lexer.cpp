#include "ngsmell/ts_lexer.hpp"

#include <array>
#include <unordered_set>

namespace ngsmell::ts {

namespace {

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' ||
           static_cast<unsigned char>(c) >= 0x80;
}

bool ident_part(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

bool digit(char c) { return c >= '0' && c <= '9'; }

// Two/three-char operators that must not be split. `<` and `>` stay single
// so generics parse cleanly.
constexpr std::array<std::string_view, 22> kMultiOps = {
    "===", "!==", "**=", "...", "=>", "==", "!=", "<=", ">=", "&&", "||",
    "??",  "?.",  "++",  "--",  "+=", "-=", "*=", "/=", "%=", "**", "|>",
};

// Tokens after which a `/` starts a regex literal rather than division.
bool regex_can_follow(const Token* prev) {
    if (!prev) return true;
    switch (prev->kind) {
        case TokenKind::Number:
        case TokenKind::String:
        case TokenKind::Template:
        case TokenKind::Regex:
            return false;
        case TokenKind::Ident: {
            static const std::unordered_set<std::string_view> kExprKeywords = {
                "return", "typeof", "instanceof", "in",    "of",   "new",  "case",
                "do",     "else",   "void",       "delete", "throw", "await", "yield",
            };
            return kExprKeywords.count(prev->text) > 0;
        }
        case TokenKind::Punct:
            return !(prev->is(")") || prev->is("]") || prev->is("}") || prev->is("++") ||
                     prev->is("--"));
        default:
            return true;
    }
}

}  // namespace

bool is_ts_keyword(std::string_view word) {
    static const std::unordered_set<std::string_view> kKeywords = {
        "abstract", "any",       "as",        "async",     "await",    "boolean",
        "break",    "case",      "catch",     "class",     "const",    "constructor",
        "continue", "declare",   "default",   "delete",    "do",       "else",
        "enum",     "export",    "extends",   "false",     "finally",  "for",
        "from",     "function",  "get",       "if",        "implements", "import",
        "in",       "instanceof", "interface", "is",       "keyof",    "let",
        "namespace", "never",    "new",       "null",      "number",   "object",
        "of",       "override",  "private",   "protected", "public",   "readonly",
        "return",   "set",       "static",    "string",    "super",    "switch",
        "symbol",   "this",      "throw",     "true",      "try",      "type",
        "typeof",   "undefined", "unknown",   "var",       "void",     "while",
        "yield",
    };
    return kKeywords.count(word) > 0;
}

LexResult lex_typescript(std::string_view src, const std::string& file, DiagnosticList& diags) {
    LexResult result;
    LineIndex lines(src);
    size_t i = 0;
    const size_t n = src.size();

    auto push = [&](TokenKind kind, size_t begin, size_t end) {
        result.tokens.push_back(
            Token{kind, src.substr(begin, end - begin), static_cast<uint32_t>(begin)});
    };

    // Consumes a `...` delimited template literal starting at `start`,
    // balancing nested `${ }` substitutions (which may themselves contain
    // strings and templates).
    auto skip_template = [&](size_t start) -> size_t {
        size_t p = start + 1;
        int brace_depth = 0;  // depth of `${` nesting
        while (p < n) {
            char c = src[p];
            if (c == '\\') {
                p += 2;
                continue;
            }
            if (brace_depth == 0) {
                if (c == '`') return p + 1;
                if (c == '$' && p + 1 < n && src[p + 1] == '{') {
                    brace_depth = 1;
                    p += 2;
                    continue;
                }
            } else {
                if (c == '{') ++brace_depth;
                if (c == '}') --brace_depth;
                if (c == '\'' || c == '"') {
                    char quote = c;
                    ++p;
                    while (p < n && src[p] != quote && src[p] != '\n') {
                        if (src[p] == '\\') ++p;
                        ++p;
                    }
                }
            }
            ++p;
        }
        return n;  // unterminated
    };

    while (i < n) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            size_t close = src.find("*/", i + 2);
            if (close == std::string_view::npos) {
                warn(diags, file, lines.locate(static_cast<uint32_t>(i)).line,
                     "unterminated block comment");
                i = n;
            } else {
                i = close + 2;
            }
            continue;
        }
        if (c == '\'' || c == '"') {
            size_t begin = i++;
            while (i < n && src[i] != c && src[i] != '\n') {
                if (src[i] == '\\') ++i;
                ++i;
            }
            if (i >= n || src[i] != c) {
                warn(diags, file, lines.locate(static_cast<uint32_t>(begin)).line,
                     "unterminated string literal");
            } else {
                ++i;
            }
            push(TokenKind::String, begin, i);
            continue;
        }
        if (c == '`') {
            size_t begin = i;
            size_t end = skip_template(i);
            if (end == n && (begin + 1 >= n || src.substr(begin).find('`', 1) == std::string_view::npos)) {
                result.unterminated_template = true;
            }
            i = end;
            push(TokenKind::Template, begin, i);
            continue;
        }
        if (digit(c) || (c == '.' && i + 1 < n && digit(src[i + 1]))) {
            size_t begin = i;
            if (c == '0' && i + 1 < n && (src[i + 1] == 'x' || src[i + 1] == 'X' ||
                                          src[i + 1] == 'b' || src[i + 1] == 'B' ||
                                          src[i + 1] == 'o' || src[i + 1] == 'O')) {
                i += 2;
                while (i < n && (ident_part(src[i]))) ++i;
            } else {
                while (i < n && (digit(src[i]) || src[i] == '_')) ++i;
                if (i < n && src[i] == '.') {
                    ++i;
                    while (i < n && (digit(src[i]) || src[i] == '_')) ++i;
                }
                if (i < n && (src[i] == 'e' || src[i] == 'E')) {
                    ++i;
                    if (i < n && (src[i] == '+' || src[i] == '-')) ++i;
                    while (i < n && digit(src[i])) ++i;
                }
                if (i < n && src[i] == 'n') ++i;  // bigint
            }
            push(TokenKind::Number, begin, i);
            continue;
        }
        if (ident_start(c)) {
            size_t begin = i;
            while (i < n && ident_part(src[i])) ++i;
            push(TokenKind::Ident, begin, i);
            continue;
        }
        if (c == '/') {
            const Token* prev = result.tokens.empty() ? nullptr : &result.tokens.back();
            if (regex_can_follow(prev)) {
                size_t begin = i;
                size_t p = i + 1;
                bool in_class = false;
                bool ok = false;
                while (p < n && src[p] != '\n') {
                    if (src[p] == '\\') {
                        p += 2;
                        continue;
                    }
                    if (src[p] == '[') in_class = true;
                    else if (src[p] == ']') in_class = false;
                    else if (src[p] == '/' && !in_class) {
                        ok = true;
                        ++p;
                        while (p < n && ident_part(src[p])) ++p;  // flags
                        break;
                    }
                    ++p;
                }
                if (ok) {
                    push(TokenKind::Regex, begin, p);
                    i = p;
                    continue;
                }
            }
        }
        // punctuation
        bool matched = false;
        for (std::string_view op : kMultiOps) {
            if (src.substr(i, op.size()) == op) {
                push(TokenKind::Punct, i, i + op.size());
                i += op.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            push(TokenKind::Punct, i, i + 1);
            ++i;
        }
    }
    result.tokens.push_back(Token{TokenKind::EndOfFile, src.substr(n, 0), static_cast<uint32_t>(n)});
    return result;
}

}  // namespace ngsmell::ts
