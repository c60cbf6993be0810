#ifndef MAGIC3_ENUMERATE_HPP_
#define MAGIC3_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magic3/decompose.hpp"
#include "magic3/errors.hpp"
#include "magic3/magic_square.hpp"
#include "magic3/series.hpp"

namespace magic3 {

enum class Source : std::uint8_t { families, brute_force };

std::string_view to_string(Source src);

struct EnumerationResult {
    std::uint64_t s = 0;
    std::vector<MagicSquare> squares;
    Source source = Source::families;
};

/// Calls visit(d, construct(d)) for every decomposition with magic
/// parameter s, ordered by (family, i, j, k, symmetry).
void for_each_family_square(std::uint64_t s, const std::function<void(const Decomposition&, const MagicSquare&)>& visit);

/// Calls visit for every magic square with centre s, ordered by (a1, a2).
/// Every cell other than a1 and a2 is forced by the line sums once b2 = s.
void for_each_brute_force(std::uint64_t s, const std::function<void(const MagicSquare&)>& visit);

EnumerationResult enumerate_families(std::uint64_t s);
EnumerationResult brute_force(std::uint64_t s);

/// Count of decompositions with magic parameter s, from the lattice-point
/// formula 8 * (#{i+3j+k = s-4} + #{i+3j+2k = s-5}) without constructing squares.
std::uint64_t count_family_parameters(std::uint64_t s);

/// Raised by reconcile when the two enumerators or the four counts disagree.
class MismatchReport : public InternalContradiction {
public:
    MismatchReport(const std::string& what, CountReport report, std::optional<Square> witness);

    const CountReport& report() const noexcept { return report_; }
    /// First square (in sorted order) found by one enumerator but not the other.
    const std::optional<Square>& witness() const noexcept { return witness_; }

private:
    CountReport report_;
    std::optional<Square> witness_;
};

/// Runs both enumerators and both series counters for s. With
/// include_brute = false the brute-force enumerator is skipped and
/// report.brute is empty.
CountReport reconcile(std::uint64_t s, bool include_brute = true);

}  // namespace magic3

#endif  // MAGIC3_ENUMERATE_HPP_
