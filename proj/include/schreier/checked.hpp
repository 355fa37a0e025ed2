#pragma once

#include <cstdint>

#include "schreier/errors.hpp"

namespace schreier {

using Int = std::int64_t;
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b)
{
    Count r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("count overflow in addition");
    return r;
}

inline Count checked_mul(Count a, Count b)
{
    Count r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("count overflow in multiplication");
    return r;
}

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

} // namespace schreier
