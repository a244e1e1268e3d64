#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace facelab {

// Counting quantities are 64-bit; every operation that can overflow is checked
// and raises instead of wrapping.
using Int = std::int64_t;

inline Int add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail("Overflow", "addition");
    return r;
}

inline Int sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail("Overflow", "subtraction");
    return r;
}

inline Int mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail("Overflow", "multiplication");
    return r;
}

inline Int sign_pow(Int e) { return (e % 2 == 0) ? 1 : -1; }

/// C(n,k) with the convention C(n,k) = 0 unless 0 <= k <= n.
inline Int binom(Int n, Int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > INT64_MAX) fail("Overflow", "binomial C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    return static_cast<Int>(r);
}

inline std::string join_ints(const std::vector<Int>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace facelab
