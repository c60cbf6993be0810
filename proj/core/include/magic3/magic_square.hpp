#ifndef MAGIC3_MAGIC_SQUARE_HPP_
#define MAGIC3_MAGIC_SQUARE_HPP_

#include <cstdint>

#include "magic3/dihedral.hpp"
#include "magic3/square.hpp"

namespace magic3 {

class MagicSquare;

/// Certifies that x has equal line sums and distinct entries.
///
/// Lines are checked in a fixed order (rows, columns, main diagonal,
/// anti-diagonal) against the first row sum, then entries are checked for
/// repeats in row-major order. Throws NotMagic or DuplicateEntries for the
/// first violation found, OverflowError if a line sum leaves 64 bits.
MagicSquare validate(const Square& x);

/// A Square known to be magic. The only way to obtain one is validate().
class MagicSquare {
public:
    const Square& square() const noexcept { return square_; }
    /// Common line sum m.
    std::uint64_t magic_sum() const noexcept { return magic_sum_; }
    /// m / 3, which is also the centre entry.
    std::uint64_t s() const noexcept { return square_[Cell::b2]; }

    friend bool operator==(const MagicSquare& x, const MagicSquare& y) { return x.square_ == y.square_; }
    friend auto operator<=>(const MagicSquare& x, const MagicSquare& y) { return x.square_ <=> y.square_; }

private:
    friend MagicSquare validate(const Square& x);
    MagicSquare(const Square& square, std::uint64_t magic_sum) : square_(square), magic_sum_(magic_sum) {}

    Square square_;
    std::uint64_t magic_sum_;
};

/// Symmetries preserve both magic conditions; the result is re-certified.
MagicSquare apply(Dihedral g, const MagicSquare& m);

}  // namespace magic3

#endif  // MAGIC3_MAGIC_SQUARE_HPP_
