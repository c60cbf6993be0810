#ifndef MAGIC3_CHECKED_HPP_
#define MAGIC3_CHECKED_HPP_

#include <concepts>

#include "magic3/errors.hpp"

namespace magic3 {

/// 128-bit signed intermediate for exact sums of 64-bit entries.
__extension__ typedef __int128 Wide;

}  // namespace magic3

namespace magic3::checked {

template <std::integral T>
[[nodiscard]] constexpr T add(T a, T b)
{
    T out{};
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
    return out;
}

template <std::integral T>
[[nodiscard]] constexpr T sub(T a, T b)
{
    T out{};
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
    return out;
}

template <std::integral T>
[[nodiscard]] constexpr T mul(T a, T b)
{
    T out{};
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
    return out;
}

/// Narrowing conversion that throws instead of truncating.
template <std::integral To, typename From>
[[nodiscard]] constexpr To narrow(From v)
{
    To out{};
    if (__builtin_add_overflow(v, From{0}, &out)) throw OverflowError("integer value out of range");
    return out;
}

}  // namespace magic3::checked

#endif  // MAGIC3_CHECKED_HPP_
