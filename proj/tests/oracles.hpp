#pragma once

// Test-side oracles, independent of the production parsing path.

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ngsmell/model.hpp"

namespace test_support {

// Comment/string stripper for the token-level any oracle. Template literals
// are removed whole, substitutions included.
inline std::string strip_comments_and_strings(std::string_view src) {
    std::string out;
    out.reserve(src.size());
    size_t i = 0;
    const size_t n = src.size();
    while (i < n) {
        char c = src[i];
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            size_t close = src.find("*/", i + 2);
            i = close == std::string_view::npos ? n : close + 2;
            out += ' ';
            continue;
        }
        if (c == '\'' || c == '"') {
            char quote = c;
            ++i;
            while (i < n && src[i] != quote && src[i] != '\n') {
                if (src[i] == '\\') ++i;
                ++i;
            }
            if (i < n) ++i;
            out += ' ';
            continue;
        }
        if (c == '`') {
            ++i;
            while (i < n && src[i] != '`') {
                if (src[i] == '\\') ++i;
                ++i;
            }
            if (i < n) ++i;
            out += ' ';
            continue;
        }
        out += c;
        ++i;
    }
    return out;
}

// Counts `any` tokens preceded by `:` or `as`, plus `Array<any>` sequences,
// outside comments and string/template literals.
inline int any_token_oracle(std::string_view raw_source) {
    std::string cleaned = strip_comments_and_strings(raw_source);
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < cleaned.size()) {
        char c = cleaned[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
            size_t s = i;
            while (i < cleaned.size() && (std::isalnum(static_cast<unsigned char>(cleaned[i])) ||
                                          cleaned[i] == '_' || cleaned[i] == '$')) {
                ++i;
            }
            tokens.push_back(cleaned.substr(s, i - s));
            continue;
        }
        tokens.push_back(std::string(1, c));
        ++i;
    }
    int count = 0;
    for (size_t k = 0; k < tokens.size(); ++k) {
        if (tokens[k] != "any") continue;
        if (k >= 1 && (tokens[k - 1] == ":" || tokens[k - 1] == "as")) {
            ++count;
        } else if (k >= 2 && tokens[k - 1] == "<" && tokens[k - 2] == "Array") {
            ++count;
        }
    }
    return count;
}

// Brute-force parent->child edge oracle: scans the raw template text of each
// component for `<selector` followed by a delimiter.
inline std::map<std::pair<std::string, std::string>, int> edge_oracle(
    const ngsmell::ProjectModel& model) {
    std::map<std::pair<std::string, std::string>, int> edges;
    for (const auto& parent : model.components) {
        const std::string& text = parent.template_ast.source;
        for (const auto& child : model.components) {
            if (!child.selector) continue;
            std::string needle = "<" + *child.selector;
            size_t pos = 0;
            while ((pos = text.find(needle, pos)) != std::string::npos) {
                size_t after = pos + needle.size();
                char c = after < text.size() ? text[after] : '\0';
                if (c == '>' || c == '/' || std::isspace(static_cast<unsigned char>(c))) {
                    ++edges[{parent.class_name, child.class_name}];
                }
                pos = after;
            }
        }
    }
    return edges;
}

}  // namespace test_support
