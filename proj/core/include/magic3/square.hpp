#ifndef MAGIC3_SQUARE_HPP_
#define MAGIC3_SQUARE_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace magic3 {

using Entry = std::uint64_t;

/// Cell names in row-major order: row 0 is a1 a2 a3, row 1 is b1 b2 b3,
/// row 2 is c1 c2 c3.
enum class Cell : std::uint8_t { a1, a2, a3, b1, b2, b3, c1, c2, c3 };

/// A 3x3 grid of nonnegative integers.
class Square {
public:
    static constexpr std::size_t kSize = 9;

    constexpr Square() = default;
    constexpr explicit Square(const std::array<Entry, kSize>& entries) : entries_(entries) {}

    /// Row-major entries; throws std::invalid_argument unless exactly nine are given.
    static Square from_rows(std::initializer_list<Entry> entries);

    constexpr Entry at(std::size_t row, std::size_t col) const { return entries_[row * 3 + col]; }
    constexpr Entry operator[](Cell c) const { return entries_[static_cast<std::size_t>(c)]; }
    constexpr std::span<const Entry, kSize> entries() const { return entries_; }

    Entry min_entry() const;
    Entry max_entry() const;

    friend constexpr auto operator<=>(const Square&, const Square&) = default;

private:
    std::array<Entry, kSize> entries_{};
};

/// Entry-wise sum; throws OverflowError.
Square add(const Square& x, const Square& y);

/// Entry-wise product by n; throws OverflowError.
Square scale(Entry n, const Square& x);

/// Entry-wise difference; throws OverflowError if any entry of y exceeds x.
Square subtract(const Square& x, const Square& y);

/// The six constant squares of the order-3 basis.
namespace basis {

inline constexpr Square A{{1, 1, 1, 1, 1, 1, 1, 1, 1}};
inline constexpr Square B{{5, 0, 4, 2, 3, 4, 2, 6, 1}};
inline constexpr Square C{{2, 0, 1, 0, 1, 2, 1, 2, 0}};
inline constexpr Square D{{3, 0, 3, 2, 2, 2, 1, 4, 1}};
inline constexpr Square T1{{7, 0, 5, 2, 4, 6, 3, 8, 1}};
inline constexpr Square T2{{8, 0, 7, 4, 5, 6, 3, 10, 2}};
inline constexpr Square Zero{};

}  // namespace basis

}  // namespace magic3

#endif  // MAGIC3_SQUARE_HPP_
