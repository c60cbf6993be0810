#include "magic3/magic_square.hpp"

#include <array>
#include <string>

#include "magic3/checked.hpp"
#include "magic3/errors.hpp"

namespace magic3 {

NotMagic::NotMagic(std::string line, std::uint64_t expected, std::uint64_t actual)
    : DomainError(line + " sums to " + std::to_string(actual) + ", expected " + std::to_string(expected)),
      line_(std::move(line)),
      expected_(expected),
      actual_(actual)
{
}

DuplicateEntries::DuplicateEntries(std::uint64_t value)
    : DomainError("duplicate entry " + std::to_string(value)), value_(value)
{
}

namespace {

struct Line {
    const char* name;
    std::array<Cell, 3> cells;
};

constexpr std::array<Line, 8> kLines{{
    {"row 1", {Cell::a1, Cell::a2, Cell::a3}},
    {"row 2", {Cell::b1, Cell::b2, Cell::b3}},
    {"row 3", {Cell::c1, Cell::c2, Cell::c3}},
    {"column 1", {Cell::a1, Cell::b1, Cell::c1}},
    {"column 2", {Cell::a2, Cell::b2, Cell::c2}},
    {"column 3", {Cell::a3, Cell::b3, Cell::c3}},
    {"main diagonal", {Cell::a1, Cell::b2, Cell::c3}},
    {"anti-diagonal", {Cell::a3, Cell::b2, Cell::c1}},
}};

std::uint64_t line_sum(const Square& x, const Line& line)
{
    std::uint64_t sum = 0;
    for (Cell c : line.cells) sum = checked::add(sum, x[c]);
    return sum;
}

}  // namespace

MagicSquare validate(const Square& x)
{
    const std::uint64_t m = line_sum(x, kLines[0]);
    for (const Line& line : kLines) {
        const std::uint64_t sum = line_sum(x, line);
        if (sum != m) throw NotMagic(line.name, m, sum);
    }

    const auto entries = x.entries();
    for (std::size_t p = 1; p < entries.size(); ++p) {
        for (std::size_t q = 0; q < p; ++q) {
            if (entries[p] == entries[q]) throw DuplicateEntries(entries[p]);
        }
    }

    // Summing the middle row, middle column and both diagonals counts the
    // centre four times and every other cell once: 4m = 3m + 3*b2.
    if (m % 3 != 0 || m / 3 != x[Cell::b2]) throw InternalContradiction("magic sum is not three times the centre");
    return MagicSquare(x, m);
}

MagicSquare apply(Dihedral g, const MagicSquare& m) { return validate(apply(g, m.square())); }

}  // namespace magic3
