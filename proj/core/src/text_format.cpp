#include "magic3/text_format.hpp"

#include <array>
#include <charconv>
#include <string>

#include "magic3/errors.hpp"

namespace magic3 {

namespace {

bool is_separator(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' || c == ';'; }

}  // namespace

Square parse_square(std::string_view text)
{
    std::array<Entry, Square::kSize> out{};
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (is_separator(text[pos])) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_separator(text[end])) ++end;
        const std::string_view token = text.substr(pos, end - pos);

        Entry value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value, 10);
        if (ec == std::errc::result_out_of_range) throw ParseError("entry out of 64-bit range: " + std::string(token));
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError("not a nonnegative integer: " + std::string(token));
        }
        if (count == Square::kSize) throw ParseError("more than nine entries");
        out[count++] = value;
        pos = end;
    }
    if (count != Square::kSize) throw ParseError("expected nine entries, got " + std::to_string(count));
    return Square(out);
}

std::string format_square(const Square& x)
{
    std::string out;
    for (std::size_t n = 0; n < Square::kSize; ++n) {
        if (n != 0) out += ' ';
        out += std::to_string(x.entries()[n]);
    }
    return out;
}

}  // namespace magic3
