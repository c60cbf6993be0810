#ifndef MAGIC3_DIHEDRAL_HPP_
#define MAGIC3_DIHEDRAL_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "magic3/square.hpp"

namespace magic3 {

/// The eight rotations and reflections of the 3x3 grid. Rotations are
/// clockwise; fh mirrors across the horizontal axis, fv across the vertical
/// axis, fd across the main diagonal and fa across the anti-diagonal.
enum class Dihedral : std::uint8_t { id, r90, r180, r270, fh, fv, fd, fa };

inline constexpr std::array<Dihedral, 8> kAllDihedral{
    Dihedral::id, Dihedral::r90, Dihedral::r180, Dihedral::r270,
    Dihedral::fh, Dihedral::fv,  Dihedral::fd,   Dihedral::fa,
};

constexpr std::size_t index_of(Dihedral g) { return static_cast<std::size_t>(g); }

std::string_view to_string(Dihedral g);
std::optional<Dihedral> parse_dihedral(std::string_view name);

/// N[r][c] = x[source(r, c)] for the fixed position map of g.
Square apply(Dihedral g, const Square& x);

/// The element g∘h, i.e. apply(compose(g, h), x) == apply(g, apply(h, x)).
Dihedral compose(Dihedral g, Dihedral h);

Dihedral inverse(Dihedral g);

}  // namespace magic3

#endif  // MAGIC3_DIHEDRAL_HPP_
