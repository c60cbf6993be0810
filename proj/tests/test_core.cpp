#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <set>

#include "magic3/dihedral.hpp"
#include "magic3/errors.hpp"
#include "magic3/magic_square.hpp"
#include "magic3/square.hpp"
#include "magic3/text_format.hpp"
#include "oracles.hpp"

using namespace magic3;
using namespace magic3::basis;

namespace {

const Square kProbe = Square::from_rows({1, 2, 3, 4, 5, 6, 7, 8, 9});

}  // namespace

TEST_CASE("constants match the basis tables")
{
    CHECK(A == Square::from_rows({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(B == Square::from_rows({5, 0, 4, 2, 3, 4, 2, 6, 1}));
    CHECK(C == Square::from_rows({2, 0, 1, 0, 1, 2, 1, 2, 0}));
    CHECK(D == Square::from_rows({3, 0, 3, 2, 2, 2, 1, 4, 1}));
    CHECK(T1 == Square::from_rows({7, 0, 5, 2, 4, 6, 3, 8, 1}));
    CHECK(T2 == Square::from_rows({8, 0, 7, 4, 5, 6, 3, 10, 2}));
    CHECK(T1[Cell::a1] == 7);
    CHECK(T1[Cell::c2] == 8);
    CHECK(T2.at(2, 1) == 10);
}

TEST_CASE("add")
{
    CHECK(add(C, D) == B);
    CHECK(add(B, C) == T1);
    CHECK(add(B, D) == T2);
    CHECK(add(Zero, Zero) == Zero);

    const Entry max = std::numeric_limits<Entry>::max();
    const Square big{{max, 0, 0, 0, 0, 0, 0, 0, 0}};
    CHECK_THROWS_AS((void)add(big, A), OverflowError);
}

TEST_CASE("scale")
{
    CHECK(scale(0, T1) == Zero);
    CHECK(scale(2, C) == Square::from_rows({4, 0, 2, 0, 2, 4, 2, 4, 0}));
    CHECK(scale(3, A) == Square::from_rows({3, 3, 3, 3, 3, 3, 3, 3, 3}));
    CHECK_THROWS_AS((void)scale(std::numeric_limits<Entry>::max() / 3, T1), OverflowError);
}

TEST_CASE("subtract refuses negative entries")
{
    CHECK(subtract(T1, C) == Square::from_rows({5, 0, 4, 2, 3, 4, 2, 6, 1}));
    CHECK_THROWS_AS((void)subtract(C, D), OverflowError);
}

TEST_CASE("A, C, D are linearly independent")
{
    // Entries a2 vanish in all three; cells b1, a1, c3 pin x, y, z:
    // b1: x + 0y + 2z, c3: x + 0y + z, a1: x + 2y + 3z.
    for (std::int64_t x = -6; x <= 6; ++x)
        for (std::int64_t y = -6; y <= 6; ++y)
            for (std::int64_t z = -6; z <= 6; ++z) {
                bool zero = true;
                for (std::size_t n = 0; n < 9; ++n) {
                    const auto v = x * std::int64_t(A.entries()[n]) + y * std::int64_t(C.entries()[n]) +
                                   z * std::int64_t(D.entries()[n]);
                    zero = zero && v == 0;
                }
                CHECK(zero == (x == 0 && y == 0 && z == 0));
            }
}

TEST_CASE("apply position maps")
{
    CHECK(apply(Dihedral::id, T1) == T1);
    CHECK(apply(Dihedral::fh, T1) == Square::from_rows({3, 8, 1, 2, 4, 6, 7, 0, 5}));
    const Square c_prime = apply(Dihedral::fv, C);
    CHECK(c_prime == Square::from_rows({1, 0, 2, 2, 1, 0, 0, 2, 1}));
    CHECK(add(C, c_prime) == D);

    // 1 2 3 / 4 5 6 / 7 8 9 turned a quarter clockwise.
    CHECK(apply(Dihedral::r90, kProbe) == Square::from_rows({7, 4, 1, 8, 5, 2, 9, 6, 3}));
    CHECK(apply(Dihedral::r180, kProbe) == Square::from_rows({9, 8, 7, 6, 5, 4, 3, 2, 1}));
    CHECK(apply(Dihedral::r270, kProbe) == Square::from_rows({3, 6, 9, 2, 5, 8, 1, 4, 7}));
    CHECK(apply(Dihedral::fv, kProbe) == Square::from_rows({3, 2, 1, 6, 5, 4, 9, 8, 7}));
    CHECK(apply(Dihedral::fd, kProbe) == Square::from_rows({1, 4, 7, 2, 5, 8, 3, 6, 9}));
    CHECK(apply(Dihedral::fa, kProbe) == Square::from_rows({9, 6, 3, 8, 5, 2, 7, 4, 1}));
}

TEST_CASE("dihedral group laws")
{
    std::set<Square> images;
    for (Dihedral g : kAllDihedral) {
        images.insert(apply(g, kProbe));
        CHECK(compose(g, inverse(g)) == Dihedral::id);
        CHECK(compose(inverse(g), g) == Dihedral::id);
        CHECK(compose(Dihedral::id, g) == g);
        for (Dihedral h : kAllDihedral) {
            CHECK(apply(g, apply(h, kProbe)) == apply(compose(g, h), kProbe));
            for (Dihedral k : kAllDihedral) CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
        }
    }
    CHECK(images.size() == 8);
    CHECK(inverse(Dihedral::r90) == Dihedral::r270);
    CHECK(compose(Dihedral::r90, Dihedral::r90) == Dihedral::r180);
}

TEST_CASE("dihedral names round-trip")
{
    for (Dihedral g : kAllDihedral) CHECK(parse_dihedral(to_string(g)) == g);
    CHECK_FALSE(parse_dihedral("r45").has_value());
}

TEST_CASE("validate")
{
    const MagicSquare t1 = validate(T1);
    CHECK(t1.magic_sum() == 12);
    CHECK(t1.s() == 4);
    const MagicSquare t2 = validate(T2);
    CHECK(t2.magic_sum() == 15);
    CHECK(t2.s() == 5);

    try {
        (void)validate(B);
        FAIL("B has repeated entries");
    } catch (const DuplicateEntries& e) {
        CHECK(e.value() == 4);  // b3 repeats a3 before c1 repeats b1
    }
    CHECK_THROWS_AS((void)validate(Zero), DuplicateEntries);

    try {
        (void)validate(kProbe);
        FAIL("probe is not magic");
    } catch (const NotMagic& e) {
        CHECK(e.line() == "row 2");
        CHECK(e.expected() == 6);
        CHECK(e.actual() == 15);
    }
    // Rows all sum to 15 but column 1 does not.
    try {
        (void)validate(Square::from_rows({1, 5, 9, 2, 6, 7, 3, 4, 8}));
        FAIL("columns differ");
    } catch (const NotMagic& e) {
        CHECK(e.line() == "column 1");
    }
    // Semi-magic: rows and columns agree, diagonals do not.
    try {
        (void)validate(Square::from_rows({1, 2, 3, 3, 1, 2, 2, 3, 1}));
        FAIL("diagonals differ");
    } catch (const NotMagic& e) {
        CHECK(e.line() == "main diagonal");
    }
}

TEST_CASE("line sum overflow is reported, not wrapped")
{
    const Entry max = std::numeric_limits<Entry>::max();
    CHECK_THROWS_AS((void)validate(Square{{max, max, max, 0, 0, 0, 0, 0, 0}}), OverflowError);
}

TEST_CASE("symmetries preserve magic squares and give eight distinct images")
{
    for (std::int64_t m = 0; m <= 30; ++m) {
        for (const Square& sq : oracle::naive_magic_squares(m)) {
            const MagicSquare ms = validate(sq);
            std::set<Square> orbit;
            for (Dihedral g : kAllDihedral) {
                const MagicSquare image = apply(g, ms);
                CHECK(image.magic_sum() == ms.magic_sum());
                orbit.insert(image.square());
            }
            CHECK(orbit.size() == 8);
        }
    }
}

TEST_CASE("magic sums are multiples of three")
{
    for (std::int64_t m = 0; m <= 27; ++m) {
        const auto squares = oracle::naive_magic_squares(m);
        if (m % 3 != 0) CHECK(squares.empty());
        for (const Square& sq : squares) CHECK(validate(sq).magic_sum() == 3 * sq[Cell::b2]);
    }
}

TEST_CASE("parse_square")
{
    CHECK(parse_square("7 0 5 2 4 6 3 8 1") == T1);
    CHECK(parse_square("7,0,5; 2,4,6; 3,8,1") == T1);
    CHECK(parse_square("  7\t0 5\n2 4 6;3 8 1;") == T1);
    CHECK(parse_square("18446744073709551615 0 0 0 0 0 0 0 0")[Cell::a1] == std::numeric_limits<Entry>::max());
    CHECK_THROWS_AS((void)parse_square("1 2 3"), ParseError);
    CHECK_THROWS_AS((void)parse_square("1 2 3 4 5 6 7 8 9 10"), ParseError);
    CHECK_THROWS_AS((void)parse_square("1 2 3 4 5 6 7 8 -9"), ParseError);
    CHECK_THROWS_AS((void)parse_square("1 2 3 4 5 6 7 8 x"), ParseError);
    CHECK_THROWS_AS((void)parse_square("1 2 3 4 5 6 7 8 1.5"), ParseError);
    CHECK_THROWS_AS((void)parse_square("18446744073709551616 0 0 0 0 0 0 0 0"), ParseError);
    CHECK(format_square(T2) == "8 0 7 4 5 6 3 10 2");
    CHECK(parse_square(format_square(T2)) == T2);
}
