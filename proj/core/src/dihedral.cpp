#include "magic3/dihedral.hpp"

#include <utility>

#include "magic3/errors.hpp"

namespace magic3 {

namespace {

using Position = std::pair<int, int>;

// Source cell read by output cell (r, c).
constexpr Position source(Dihedral g, int r, int c)
{
    switch (g) {
    case Dihedral::id: return {r, c};
    case Dihedral::r90: return {2 - c, r};
    case Dihedral::r180: return {2 - r, 2 - c};
    case Dihedral::r270: return {c, 2 - r};
    case Dihedral::fh: return {2 - r, c};
    case Dihedral::fv: return {r, 2 - c};
    case Dihedral::fd: return {c, r};
    case Dihedral::fa: return {2 - c, 2 - r};
    }
    return {r, c};
}

constexpr bool same_map(Dihedral k, Dihedral g, Dihedral h)
{
    // apply(g, apply(h, x))[r][c] = x[source_h(source_g(r, c))]
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            auto [gr, gc] = source(g, r, c);
            if (source(h, gr, gc) != source(k, r, c)) return false;
        }
    }
    return true;
}

constexpr std::array<std::array<Dihedral, 8>, 8> make_composition_table()
{
    std::array<std::array<Dihedral, 8>, 8> table{};
    for (Dihedral g : kAllDihedral) {
        for (Dihedral h : kAllDihedral) {
            for (Dihedral k : kAllDihedral) {
                if (same_map(k, g, h)) table[index_of(g)][index_of(h)] = k;
            }
        }
    }
    return table;
}

constexpr auto kComposition = make_composition_table();

constexpr std::array<std::string_view, 8> kNames{"id", "r90", "r180", "r270", "fh", "fv", "fd", "fa"};

}  // namespace

std::string_view to_string(Dihedral g) { return kNames[index_of(g)]; }

std::optional<Dihedral> parse_dihedral(std::string_view name)
{
    for (Dihedral g : kAllDihedral) {
        if (kNames[index_of(g)] == name) return g;
    }
    return std::nullopt;
}

Square apply(Dihedral g, const Square& x)
{
    std::array<Entry, Square::kSize> out{};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            auto [sr, sc] = source(g, r, c);
            out[static_cast<std::size_t>(r * 3 + c)] = x.at(static_cast<std::size_t>(sr), static_cast<std::size_t>(sc));
        }
    }
    return Square(out);
}

Dihedral compose(Dihedral g, Dihedral h) { return kComposition[index_of(g)][index_of(h)]; }

Dihedral inverse(Dihedral g)
{
    for (Dihedral k : kAllDihedral) {
        if (compose(g, k) == Dihedral::id) return k;
    }
    throw InternalContradiction("dihedral element without inverse");
}

}  // namespace magic3
