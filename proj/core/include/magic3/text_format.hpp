#ifndef MAGIC3_TEXT_FORMAT_HPP_
#define MAGIC3_TEXT_FORMAT_HPP_

#include <string>
#include <string_view>

#include "magic3/square.hpp"

namespace magic3 {

/// Parses nine base-10 nonnegative integers in row-major order. Whitespace
/// and commas separate values; semicolons between rows are ignored.
/// Throws ParseError.
Square parse_square(std::string_view text);

/// Nine entries separated by single spaces, e.g. "7 0 5 2 4 6 3 8 1".
std::string format_square(const Square& x);

}  // namespace magic3

#endif  // MAGIC3_TEXT_FORMAT_HPP_
