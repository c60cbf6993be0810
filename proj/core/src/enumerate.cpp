#include "magic3/enumerate.hpp"

#include <algorithm>
#include <array>

#include "magic3/checked.hpp"

namespace magic3 {

namespace {

bool has_distinct_entries(std::array<Entry, Square::kSize> entries)
{
    std::sort(entries.begin(), entries.end());
    return std::adjacent_find(entries.begin(), entries.end()) == entries.end();
}

std::string describe(const CountReport& r)
{
    std::string out = "s=" + std::to_string(r.s) + " closed=" + std::to_string(r.closed_form) +
                      " series=" + std::to_string(r.series) + " families=" + std::to_string(r.families);
    out += " brute=" + (r.brute ? std::to_string(*r.brute) : std::string("null"));
    return out;
}

}  // namespace

std::string_view to_string(Source src) { return src == Source::families ? "families" : "brute_force"; }

void for_each_family_square(std::uint64_t s, const std::function<void(const Decomposition&, const MagicSquare&)>& visit)
{
    // F1: i + 3j + k = s - 4
    if (s >= 4) {
        const std::uint64_t n = s - 4;
        for (std::uint64_t i = 0; i <= n; ++i) {
            for (std::uint64_t j = 0; 3 * j <= n - i; ++j) {
                const std::uint64_t k = n - i - 3 * j;
                for (Dihedral g : kAllDihedral) {
                    const Decomposition d{Family::F1, i, j, k, g};
                    visit(d, construct(d));
                }
            }
        }
    }
    // F2: i + 3j + 2k = s - 5
    if (s >= 5) {
        const std::uint64_t n = s - 5;
        for (std::uint64_t i = 0; i <= n; ++i) {
            for (std::uint64_t j = 0; 3 * j <= n - i; ++j) {
                const std::uint64_t rest = n - i - 3 * j;
                if (rest % 2 != 0) continue;
                for (Dihedral g : kAllDihedral) {
                    const Decomposition d{Family::F2, i, j, rest / 2, g};
                    visit(d, construct(d));
                }
            }
        }
    }
}

void for_each_brute_force(std::uint64_t s, const std::function<void(const MagicSquare&)>& visit)
{
    const Wide S = s;
    for (Wide a1 = 0; a1 <= 2 * S; ++a1) {
        for (Wide a2 = 0; a2 <= 2 * S; ++a2) {
            const std::array<Wide, Square::kSize> cells{
                a1,
                a2,
                3 * S - a1 - a2,
                4 * S - 2 * a1 - a2,
                S,
                2 * S - (4 * S - 2 * a1 - a2),
                a1 + a2 - S,
                2 * S - a2,
                2 * S - a1,
            };
            if (std::any_of(cells.begin(), cells.end(), [](Wide v) { return v < 0; })) continue;
            std::array<Entry, Square::kSize> entries{};
            for (std::size_t n = 0; n < Square::kSize; ++n) entries[n] = checked::narrow<Entry>(cells[n]);
            if (!has_distinct_entries(entries)) continue;
            visit(validate(Square(entries)));
        }
    }
}

EnumerationResult enumerate_families(std::uint64_t s)
{
    EnumerationResult out{s, {}, Source::families};
    for_each_family_square(s, [&](const Decomposition&, const MagicSquare& m) { out.squares.push_back(m); });
    return out;
}

EnumerationResult brute_force(std::uint64_t s)
{
    EnumerationResult out{s, {}, Source::brute_force};
    for_each_brute_force(s, [&](const MagicSquare& m) { out.squares.push_back(m); });
    return out;
}

std::uint64_t count_family_parameters(std::uint64_t s)
{
    std::uint64_t triples = 0;
    if (s >= 4) {
        const std::uint64_t n = s - 4;
        for (std::uint64_t j = 0; 3 * j <= n; ++j) triples += n - 3 * j + 1;  // choices of i; k is forced
    }
    if (s >= 5) {
        const std::uint64_t n = s - 5;
        for (std::uint64_t j = 0; 3 * j <= n; ++j) triples += (n - 3 * j) / 2 + 1;  // choices of k; i is forced
    }
    return checked::mul<std::uint64_t>(8, triples);
}

MismatchReport::MismatchReport(const std::string& what, CountReport report, std::optional<Square> witness)
    : InternalContradiction(what), report_(report), witness_(witness)
{
}

CountReport reconcile(std::uint64_t s, bool include_brute)
{
    CountReport report;
    report.s = s;
    report.closed_form = count_closed(s);
    report.series = count_series(s);

    std::vector<Square> from_families;
    for_each_family_square(s, [&](const Decomposition&, const MagicSquare& m) { from_families.push_back(m.square()); });
    report.families = from_families.size();

    std::optional<Square> witness;
    if (include_brute) {
        std::vector<Square> from_brute;
        for_each_brute_force(s, [&](const MagicSquare& m) { from_brute.push_back(m.square()); });
        report.brute = from_brute.size();

        std::sort(from_families.begin(), from_families.end());
        std::sort(from_brute.begin(), from_brute.end());
        std::vector<Square> diff;
        std::set_symmetric_difference(from_families.begin(), from_families.end(), from_brute.begin(), from_brute.end(),
                                      std::back_inserter(diff));
        if (!diff.empty()) witness = diff.front();
        report.sets_equal = diff.empty();
        if (std::adjacent_find(from_families.begin(), from_families.end()) != from_families.end()) {
            throw MismatchReport("family enumeration produced a repeated square at " + describe(report), report,
                                 *std::adjacent_find(from_families.begin(), from_families.end()));
        }
    }

    if (!report.consistent() || witness) {
        throw MismatchReport("count mismatch: " + describe(report), report, witness);
    }
    return report;
}

}  // namespace magic3
