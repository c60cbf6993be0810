#include "magic3/selftest.hpp"

#include <exception>

#include "magic3/canonical.hpp"
#include "magic3/decompose.hpp"
#include "magic3/enumerate.hpp"
#include "magic3/text_format.hpp"

namespace magic3 {

namespace {

std::string describe(const Decomposition& d)
{
    return std::string(to_string(d.family)) + " i=" + std::to_string(d.i) + " j=" + std::to_string(d.j) +
           " k=" + std::to_string(d.k) + " symmetry=" + std::string(to_string(d.symmetry));
}

// Empty string on success.
std::string check_parameter(std::uint64_t s, std::vector<CountReport>& counts)
{
    try {
        counts.push_back(reconcile(s));
    } catch (const MismatchReport& e) {
        std::string out = e.what();
        if (e.witness()) out += "; witness " + format_square(*e.witness());
        return out;
    }

    std::string failure;
    for_each_family_square(s, [&](const Decomposition& d, const MagicSquare& m) {
        if (!failure.empty()) return;
        if (decompose(m) != d) failure = "decompose(construct(d)) != d for " + describe(d);
        else if (m.s() != s || magic_parameter(d) != s) failure = "magic parameter mismatch for " + describe(d);
    });
    if (!failure.empty()) return failure;

    for_each_brute_force(s, [&](const MagicSquare& m) {
        if (!failure.empty()) return;
        const Reduction red = reduce(m);
        const Square& r = red.reduced.square();
        if (r[Cell::a2] != 0 || r[Cell::c2] != 2 * red.reduced.s()) {
            failure = "reduced form lacks a2 = 0, c2 = 2s: " + format_square(r);
            return;
        }
        const Decomposition d = decompose(m);
        if (construct(d) != m) failure = "construct(decompose(m)) != m for " + format_square(m.square());
        else if (d.i != m.square().min_entry()) failure = "i differs from minimum entry for " + format_square(m.square());
        else if (m.square().max_entry() > 2 * s) failure = "entry above 2s in " + format_square(m.square());
    });
    return failure;
}

}  // namespace

SelftestResult run_selftest(std::uint64_t max_s)
{
    SelftestResult result;
    for (std::uint64_t s = 0; s <= max_s; ++s) {
        std::string failure;
        try {
            failure = check_parameter(s, result.counts);
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        if (!failure.empty()) {
            result.passed = false;
            result.failure = "s=" + std::to_string(s) + ": " + failure;
            break;
        }
    }
    return result;
}

}  // namespace magic3
