#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "magic3/errors.hpp"
#include "magic3/series.hpp"
#include "oracles.hpp"

using namespace magic3;

TEST_CASE("expand")
{
    CHECK(expand(magic_gf(), 13) == std::vector<std::int64_t>{0, 0, 0, 0, 8, 24, 32, 56, 80, 104, 136, 176, 208});
    CHECK(expand({{1}, {1, -1}}, 4) == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(expand({{1, -1}, {1, -1}}, 3) == std::vector<std::int64_t>{1, 0, 0});
    CHECK(expand({{1}, {1}}, 0).empty());
    CHECK_THROWS_AS((void)expand({{1}, {2, -1}}, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)expand({{1}, {}}, 3), std::invalid_argument);
    // 1/(1-2t) doubles each step and leaves int64 after 2^62.
    CHECK_THROWS_AS((void)expand({{1}, {1, -2}}, 70), OverflowError);
}

TEST_CASE("magic_gf")
{
    const RationalSeries& gf = magic_gf();
    CHECK(gf.numerator == Poly{0, 0, 0, 0, 8, 16});
    CHECK(gf.denominator.size() - 1 == 6);
    CHECK(gf.denominator == Poly{1, -1, -1, 0, 1, 1, -1});

    const auto c = expand(gf, 101);
    const Poly product = multiply(gf.denominator, c);
    for (std::size_t n = 0; n <= 100; ++n) {
        const std::int64_t expected = n < gf.numerator.size() ? gf.numerator[n] : 0;
        CHECK(product[n] == expected);
    }
}

TEST_CASE("count_closed")
{
    CHECK(count_closed(4) == 8);
    CHECK(count_closed(0) == 0);
    CHECK(count_closed(1) == 0);
    CHECK(count_closed(2) == 0);
    CHECK(count_closed(3) == 0);
    CHECK(count_closed(8) == 80);
    CHECK(count_closed(12) == 208);
}

TEST_CASE("closed form, series and partition count agree for s <= 1000")
{
    const auto c = expand(magic_gf(), 1001);
    for (std::uint64_t s = 0; s <= 1000; ++s) {
        REQUIRE(count_closed(s) == static_cast<std::uint64_t>(c[s]));
        REQUIRE(count_closed(s) % 8 == 0);
    }
    for (std::int64_t s = 0; s <= 200; ++s) REQUIRE(count_closed(static_cast<std::uint64_t>(s)) == oracle::partition_count(s));
    CHECK(count_series(12) == 208);
    CHECK(count_series(0) == 0);
}

TEST_CASE("count is quadratic on each residue class mod 6")
{
    for (std::uint64_t residue = 0; residue < 6; ++residue) {
        std::vector<std::int64_t> values;
        for (std::uint64_t s = residue; s <= 1000; s += 6) values.push_back(static_cast<std::int64_t>(count_closed(s)));
        const std::int64_t second = values[2] - 2 * values[1] + values[0];
        for (std::size_t n = 2; n < values.size(); ++n) CHECK(values[n] - 2 * values[n - 1] + values[n - 2] == second);
        // Leading term 2s^2 over a step of 6 gives a constant second difference of 2*36*2.
        CHECK(second == 144);
    }
}

TEST_CASE("count_closed stays exact for large s")
{
    const std::uint64_t s = 1'000'000'000;
    // (6s^2 - 20s + 3 - 3 + 8) / 3 with s even and s mod 3 = 1.
    CHECK(count_closed(s) == (6 * s * s - 20 * s + 8) / 3);
    CHECK_THROWS_AS((void)count_closed(std::uint64_t{1} << 40), OverflowError);
}

TEST_CASE("CountReport consistency")
{
    CountReport r{12, 208, 208, 208, 208, true};
    CHECK(r.consistent());
    r.brute.reset();
    CHECK(r.consistent());
    r.series = 207;
    CHECK_FALSE(r.consistent());
}
