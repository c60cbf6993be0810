#include "magic3/canonical.hpp"

#include <array>
#include <optional>

#include "magic3/checked.hpp"
#include "magic3/errors.hpp"

namespace magic3 {

namespace {

// Entries of a signed combination, checked for range before they become a Square.
Square to_square(const std::array<Wide, Square::kSize>& values, const char* what)
{
    std::array<Entry, Square::kSize> out{};
    for (std::size_t n = 0; n < Square::kSize; ++n) {
        if (values[n] < 0) throw NotReduced(std::string(what) + ": negative entry");
        out[n] = checked::narrow<Entry>(values[n]);
    }
    return Square(out);
}

}  // namespace

bool corners_ordered(const Square& x)
{
    return x[Cell::c3] < x[Cell::c1] && x[Cell::c1] < x[Cell::a3] && x[Cell::a3] < x[Cell::a1];
}

ReducedMagicSquare::ReducedMagicSquare(const MagicSquare& m) : magic_(m)
{
    const Square& x = m.square();
    if (x.min_entry() != 0) throw NotReduced("reduced square must contain a zero entry");
    if (!corners_ordered(x)) throw NotReduced("corners must satisfy c3 < c1 < a3 < a1");
    if (x[Cell::a2] != 0 || x[Cell::c2] != checked::mul<std::uint64_t>(2, m.s())) {
        throw InternalContradiction("reduced square without a2 = 0 and c2 = 2s");
    }
}

Dihedral canonical_symmetry(const MagicSquare& m)
{
    std::optional<Dihedral> found;
    for (Dihedral g : kAllDihedral) {
        if (!corners_ordered(apply(g, m.square()))) continue;
        if (found) throw InternalContradiction("two symmetries order the corners");
        found = g;
    }
    if (!found) throw InternalContradiction("no symmetry orders the corners");
    return *found;
}

Reduction reduce(const MagicSquare& m)
{
    const Dihedral g = canonical_symmetry(m);
    const Entry i = m.square().min_entry();
    const Square turned = apply(g, m.square());
    const Square shifted = subtract(turned, scale(i, basis::A));
    return Reduction{ReducedMagicSquare(validate(shifted)), i, g};
}

ReducedMagicSquare reduced_from_rs(std::int64_t r, std::int64_t s)
{
    const Wide R = r;
    const Wide S = s;
    const Square x = to_square({2 * S - R, 0, S + R, 2 * R, S, 2 * S - 2 * R, S - R, 2 * S, R}, "reduced_from_rs");
    try {
        return ReducedMagicSquare(validate(x));
    } catch (const DomainError& e) {
        throw NotReduced("(r, s) = (" + std::to_string(r) + ", " + std::to_string(s) + ") is not reduced: " + e.what());
    }
}

ReducedCoordinates rs_to_alpha_beta(std::int64_t r, std::int64_t s)
{
    if (r < 1) throw IllegalCoordinates("r must be at least 1");
    const std::int64_t alpha = checked::sub(checked::sub(s, checked::mul<std::int64_t>(2, r)), std::int64_t{2});
    if (alpha < -1) throw IllegalCoordinates("alpha = s - 2r - 2 is below -1");
    return ReducedCoordinates{alpha, r - 1};
}

RS alpha_beta_to_rs(const ReducedCoordinates& c)
{
    if (c.alpha < -1) throw IllegalCoordinates("alpha must be at least -1");
    if (c.beta < 0) throw IllegalCoordinates("beta must be nonnegative");
    const std::int64_t s = checked::add(checked::add(c.alpha, checked::mul<std::int64_t>(2, c.beta)), std::int64_t{4});
    return RS{c.beta + 1, s};
}

ReducedMagicSquare materialize(const ReducedCoordinates& c)
{
    if (c.alpha < -1 || c.beta < 0) throw IllegalCoordinates("coordinates out of range");
    if (c.beta == c.alpha + 1) throw IllegalCoordinates("beta = alpha + 1 gives repeated entries");
    std::array<Wide, Square::kSize> values{};
    for (std::size_t n = 0; n < Square::kSize; ++n) {
        values[n] = static_cast<Wide>(basis::T1.entries()[n]) + Wide{c.alpha} * basis::C.entries()[n] +
                    Wide{c.beta} * basis::D.entries()[n];
    }
    try {
        return ReducedMagicSquare(validate(to_square(values, "materialize")));
    } catch (const DomainError& e) {
        throw IllegalCoordinates(std::string("coordinates do not give a reduced square: ") + e.what());
    }
}

ReducedCoordinates coordinates_of(const ReducedMagicSquare& m)
{
    return rs_to_alpha_beta(checked::narrow<std::int64_t>(m.r()), checked::narrow<std::int64_t>(m.s()));
}

}  // namespace magic3
