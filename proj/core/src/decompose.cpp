#include "magic3/decompose.hpp"

#include "magic3/canonical.hpp"
#include "magic3/checked.hpp"
#include "magic3/errors.hpp"

namespace magic3 {

std::string_view to_string(Family f) { return f == Family::F1 ? "F1" : "F2"; }

std::optional<Family> parse_family(std::string_view name)
{
    if (name == "F1") return Family::F1;
    if (name == "F2") return Family::F2;
    return std::nullopt;
}

std::uint64_t magic_parameter(const Decomposition& d)
{
    using checked::add;
    using checked::mul;
    const bool f1 = d.family == Family::F1;
    const std::uint64_t base = f1 ? 4 : 5;
    const std::uint64_t k_weight = f1 ? 1 : 2;
    return add(add(add(base, d.i), mul<std::uint64_t>(3, d.j)), mul(k_weight, d.k));
}

MagicSquare construct(const Decomposition& d)
{
    const bool f1 = d.family == Family::F1;
    Square x = f1 ? basis::T1 : basis::T2;
    x = add(x, scale(d.i, basis::A));
    x = add(x, scale(d.j, basis::B));
    x = add(x, scale(d.k, f1 ? basis::C : basis::D));
    return validate(apply(inverse(d.symmetry), x));
}

Decomposition decompose(const MagicSquare& m)
{
    const Reduction red = reduce(m);
    const ReducedCoordinates c = coordinates_of(red.reduced);

    Decomposition d;
    d.i = red.i;
    d.symmetry = red.symmetry;
    if (c.alpha >= c.beta) {
        // T1 + aC + bD = T1 + bB + (a-b)C
        d.family = Family::F1;
        d.j = static_cast<std::uint64_t>(c.beta);
        d.k = static_cast<std::uint64_t>(c.alpha - c.beta);
    } else {
        // T1 + aC + bD = T2 + (a+1)B + (b-a-2)D, using T1 + D = T2 + C
        const std::int64_t k = c.beta - c.alpha - 2;
        if (k < 0) throw InternalContradiction("beta = alpha + 1 reached decompose");
        d.family = Family::F2;
        d.j = static_cast<std::uint64_t>(c.alpha + 1);
        d.k = static_cast<std::uint64_t>(k);
    }
    return d;
}

}  // namespace magic3
