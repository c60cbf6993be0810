#include "magic3/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "magic3/checked.hpp"
#include "magic3/errors.hpp"

namespace magic3 {

Poly multiply(std::span<const std::int64_t> p, std::span<const std::int64_t> q)
{
    if (p.empty() || q.empty()) return {};
    Poly out(p.size() + q.size() - 1, 0);
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; b < q.size(); ++b) {
            out[a + b] = checked::add(out[a + b], checked::mul(p[a], q[b]));
        }
    }
    return out;
}

std::vector<std::int64_t> expand(const RationalSeries& f, std::size_t n)
{
    if (f.denominator.empty() || f.denominator.front() != 1) {
        throw std::invalid_argument("denominator constant term must be 1");
    }
    std::vector<std::int64_t> c(n, 0);
    for (std::size_t m = 0; m < n; ++m) {
        std::int64_t value = m < f.numerator.size() ? f.numerator[m] : 0;
        const std::size_t depth = std::min(m, f.denominator.size() - 1);
        for (std::size_t d = 1; d <= depth; ++d) {
            value = checked::sub(value, checked::mul(f.denominator[d], c[m - d]));
        }
        c[m] = value;
    }
    return c;
}

const RationalSeries& magic_gf()
{
    static const RationalSeries gf = [] {
        const Poly one_minus_t{1, -1};
        const Poly one_minus_t2{1, 0, -1};
        const Poly one_minus_t3{1, 0, 0, -1};
        RationalSeries f;
        f.numerator = multiply(Poly{0, 0, 0, 0, 8}, Poly{1, 2});
        f.denominator = multiply(multiply(one_minus_t, one_minus_t2), one_minus_t3);
        return f;
    }();
    return gf;
}

std::uint64_t count_closed(std::uint64_t s)
{
    const Wide S = s;
    const Wide sign = (s % 2 == 0) ? 1 : -1;
    const Wide numerator = 6 * S * S - 20 * S + 3 - 3 * sign + 8 * static_cast<Wide>(s % 3);
    if (numerator % 3 != 0) throw DivisibilityViolation("quasi-polynomial numerator not divisible by 3");
    const Wide count = numerator / 3;
    if (count < 0) throw InternalContradiction("negative count from quasi-polynomial");
    return checked::narrow<std::uint64_t>(count);
}

std::uint64_t count_series(std::uint64_t s)
{
    const auto coeffs = expand(magic_gf(), checked::add<std::uint64_t>(s, 1));
    const std::int64_t c = coeffs.back();
    if (c < 0) throw InternalContradiction("negative series coefficient");
    return static_cast<std::uint64_t>(c);
}

bool CountReport::consistent() const
{
    return closed_form == series && series == families && (!brute || *brute == families);
}

}  // namespace magic3
