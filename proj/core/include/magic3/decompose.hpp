#ifndef MAGIC3_DECOMPOSE_HPP_
#define MAGIC3_DECOMPOSE_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "magic3/dihedral.hpp"
#include "magic3/magic_square.hpp"

namespace magic3 {

/// F1 squares are T1 + iA + jB + kC, F2 squares are T2 + iA + jB + kD.
enum class Family : std::uint8_t { F1, F2 };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Coordinates of a magic square in the two-family basis. Every magic
/// square has exactly one Decomposition, and every Decomposition names a
/// magic square.
struct Decomposition {
    Family family = Family::F1;
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    std::uint64_t k = 0;
    Dihedral symmetry = Dihedral::id;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
    friend auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

/// Centre entry of the square named by d: 4+i+3j+k for F1, 5+i+3j+2k for F2.
std::uint64_t magic_parameter(const Decomposition& d);

/// apply(inverse(symmetry), T + iA + jB + kX). Throws OverflowError.
MagicSquare construct(const Decomposition& d);

/// Inverse of construct.
Decomposition decompose(const MagicSquare& m);

}  // namespace magic3

#endif  // MAGIC3_DECOMPOSE_HPP_
