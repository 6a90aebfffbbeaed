#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ngsmell {

// Half-open byte range [begin, end) into a source buffer.
struct SourceSpan {
    uint32_t begin = 0;
    uint32_t end = 0;
};

struct LineCol {
    int line = 1;    // 1-based
    int column = 1;  // 1-based, in bytes
};

// Byte offset -> (line, column) lookup table for one source buffer.
class LineIndex {
public:
    LineIndex() = default;
    explicit LineIndex(std::string_view text);

    LineCol locate(uint32_t offset) const;

    // Physical lines: count of newline-delimited lines ("a\nb" and "a\nb\n"
    // are both 2, "" is 0).
    int line_count() const { return line_count_; }

private:
    std::vector<uint32_t> line_starts_{0};
    int line_count_ = 0;
};

bool is_valid_utf8(std::string_view text);

}  // namespace ngsmell
