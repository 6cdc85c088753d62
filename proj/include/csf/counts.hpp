#pragma once

#include <cstdint>

#include "csf/errors.hpp"

namespace csf {

// Exact nonnegative count. Every count this library produces is bounded by
// C(d-1, l-1) < 2^63 for orders d <= 64, so 64 bits with checked arithmetic
// are enough; kMaxTreeOrder pins that bound.
using Count = std::uint64_t;

inline constexpr int kMaxTreeOrder = 64;

inline Count checked_add(Count a, Count b) {
    Count r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count addition overflows 64 bits");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count multiplication overflows 64 bits");
    return r;
}

// C(n, k) with exact intermediate arithmetic. C(n,k) = 0 for k > n.
inline Count binomial(Count n, Count k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (Count i = 1; i <= k; ++i) {
        // r stays integral: after the division r = C(n-k+i, i).
        r = r * (n - k + i) / i;
        if (r > ~Count{0}) throw OverflowError("binomial overflows 64 bits");
    }
    return static_cast<Count>(r);
}

}  // namespace csf
