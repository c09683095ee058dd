#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cpi {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("cpi: integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("cpi: integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("cpi: integer overflow in multiplication");
    return r;
}

/* Internal invariant check. Failing one means a bijection component is
 * broken, not that the caller passed bad data. */
inline void ensure(bool cond, const char* what)
{
    if (!cond)
        throw std::logic_error(std::string("cpi: invariant violated: ") + what);
}

inline void require(bool cond, const char* what)
{
    if (!cond)
        throw std::invalid_argument(std::string("cpi: ") + what);
}

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw std::invalid_argument("cpi: " + what);
}

/// d(d-1)/2, defined for every integer d.
constexpr Int binom2(Int d) { return d * (d - 1) / 2; }

constexpr bool is_odd(Int x) { return (x & 1) != 0; }

} // namespace cpi
