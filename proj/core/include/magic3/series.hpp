#ifndef MAGIC3_SERIES_HPP_
#define MAGIC3_SERIES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace magic3 {

using Poly = std::vector<std::int64_t>;

/// numerator(t) / denominator(t) with coefficient lists indexed by power of t.
struct RationalSeries {
    Poly numerator;
    Poly denominator;  ///< constant term must be 1
};

/// Exact product of two coefficient lists. Throws OverflowError.
Poly multiply(std::span<const std::int64_t> p, std::span<const std::int64_t> q);

/// First n coefficients of the power series of f, by
/// c_m = num_m - sum_{d>=1} den_d * c_{m-d}. Throws std::invalid_argument
/// if the denominator's constant term is not 1, OverflowError on overflow.
std::vector<std::int64_t> expand(const RationalSeries& f, std::size_t n);

/// 8t^4(1+2t) / ((1-t)(1-t^2)(1-t^3)); the t^s coefficient counts magic
/// squares with magic sum 3s.
const RationalSeries& magic_gf();

/// Number of magic squares with magic sum 3s from the quasi-polynomial
///   (6s^2 - 20s + 3 - 3(-1)^s + 8(s mod 3)) / 3.
/// Throws DivisibilityViolation if the numerator is not a multiple of 3.
std::uint64_t count_closed(std::uint64_t s);

/// Same count read off the expansion of magic_gf().
std::uint64_t count_series(std::uint64_t s);

struct CountReport {
    std::uint64_t s = 0;
    std::uint64_t closed_form = 0;
    std::uint64_t series = 0;
    std::uint64_t families = 0;
    std::optional<std::uint64_t> brute;
    /// Whether the family and brute-force square sets coincide; empty when
    /// brute force was not run.
    std::optional<bool> sets_equal;

    /// All present counts are equal.
    bool consistent() const;
};

}  // namespace magic3

#endif  // MAGIC3_SERIES_HPP_
