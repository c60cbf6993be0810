#include "magic3/square.hpp"

#include <algorithm>
#include <stdexcept>

#include "magic3/checked.hpp"

namespace magic3 {

Square Square::from_rows(std::initializer_list<Entry> entries)
{
    if (entries.size() != kSize) throw std::invalid_argument("a square needs exactly nine entries");
    std::array<Entry, kSize> out{};
    std::copy(entries.begin(), entries.end(), out.begin());
    return Square(out);
}

Entry Square::min_entry() const { return *std::min_element(entries_.begin(), entries_.end()); }

Entry Square::max_entry() const { return *std::max_element(entries_.begin(), entries_.end()); }

Square add(const Square& x, const Square& y)
{
    std::array<Entry, Square::kSize> out{};
    for (std::size_t n = 0; n < Square::kSize; ++n) out[n] = checked::add(x.entries()[n], y.entries()[n]);
    return Square(out);
}

Square scale(Entry n, const Square& x)
{
    std::array<Entry, Square::kSize> out{};
    for (std::size_t p = 0; p < Square::kSize; ++p) out[p] = checked::mul(n, x.entries()[p]);
    return Square(out);
}

Square subtract(const Square& x, const Square& y)
{
    std::array<Entry, Square::kSize> out{};
    for (std::size_t n = 0; n < Square::kSize; ++n) out[n] = checked::sub(x.entries()[n], y.entries()[n]);
    return Square(out);
}

}  // namespace magic3
