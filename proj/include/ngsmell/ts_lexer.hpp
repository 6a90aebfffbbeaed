#pragma once

#include <string_view>
#include <vector>

#include "ngsmell/diagnostics.hpp"
#include "ngsmell/source.hpp"

namespace ngsmell::ts {

enum class TokenKind { Ident, Number, String, Template, Regex, Punct, EndOfFile };

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string_view text;  // view into the original source
    uint32_t offset = 0;

    uint32_t end() const { return offset + static_cast<uint32_t>(text.size()); }
    bool is(std::string_view t) const { return text == t; }
};

struct LexResult {
    std::vector<Token> tokens;  // terminated by EndOfFile
    bool unterminated_template = false;
};

LexResult lex_typescript(std::string_view source, const std::string& file, DiagnosticList& diags);

bool is_ts_keyword(std::string_view word);

}  // namespace ngsmell::ts
