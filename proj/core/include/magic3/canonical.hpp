#ifndef MAGIC3_CANONICAL_HPP_
#define MAGIC3_CANONICAL_HPP_

#include <cstdint>

#include "magic3/dihedral.hpp"
#include "magic3/magic_square.hpp"

namespace magic3 {

/// True when the corners satisfy c3 < c1 < a3 < a1.
bool corners_ordered(const Square& x);

/// A magic square with a zero entry and ordered corners. Such a square is
/// fully determined by r = c3 and s = b2:
///
///     2s-r   0    s+r
///     2r     s    2s-2r
///     s-r    2s   r
class ReducedMagicSquare {
public:
    /// Checks the reduced-form conditions; throws NotReduced.
    explicit ReducedMagicSquare(const MagicSquare& m);

    const MagicSquare& magic() const noexcept { return magic_; }
    const Square& square() const noexcept { return magic_.square(); }
    std::uint64_t r() const noexcept { return magic_.square()[Cell::c3]; }
    std::uint64_t s() const noexcept { return magic_.s(); }

    friend bool operator==(const ReducedMagicSquare& x, const ReducedMagicSquare& y) { return x.magic_ == y.magic_; }

private:
    MagicSquare magic_;
};

/// Coordinates of a reduced square written as T1 + alpha*C + beta*D.
/// Legal squares have alpha >= -1, beta >= 0 and beta != alpha + 1.
struct ReducedCoordinates {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;

    friend bool operator==(const ReducedCoordinates&, const ReducedCoordinates&) = default;
};

/// The unique symmetry g such that apply(g, m) has ordered corners.
Dihedral canonical_symmetry(const MagicSquare& m);

struct Reduction {
    ReducedMagicSquare reduced;
    std::uint64_t i;  ///< minimum entry of the input
    Dihedral symmetry;  ///< forward map: input to canonical orientation
};

/// reduced = apply(g, m) - i*A. The input is recovered as
/// apply(inverse(g), reduced + i*A).
Reduction reduce(const MagicSquare& m);

/// Square with c3 = r and centre s; throws NotReduced if it is not a
/// reduced magic square.
ReducedMagicSquare reduced_from_rs(std::int64_t r, std::int64_t s);

/// alpha = s - 2r - 2, beta = r - 1. Throws IllegalCoordinates when r < 1 or
/// the result has alpha < -1.
ReducedCoordinates rs_to_alpha_beta(std::int64_t r, std::int64_t s);

struct RS {
    std::int64_t r;
    std::int64_t s;

    friend bool operator==(const RS&, const RS&) = default;
};

/// r = beta + 1, s = alpha + 2*beta + 4. Throws IllegalCoordinates when
/// alpha < -1 or beta < 0.
RS alpha_beta_to_rs(const ReducedCoordinates& c);

/// T1 + alpha*C + beta*D. Throws IllegalCoordinates for out-of-range
/// coordinates, including beta == alpha + 1 (repeated entries).
ReducedMagicSquare materialize(const ReducedCoordinates& c);

/// Coordinates of a reduced square.
ReducedCoordinates coordinates_of(const ReducedMagicSquare& m);

}  // namespace magic3

#endif  // MAGIC3_CANONICAL_HPP_
