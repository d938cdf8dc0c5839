#ifndef CPCODES_UTIL_HPP
#define CPCODES_UTIL_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace cpcodes {

/// Integer square root: largest r with r*r <= x.
inline std::uint64_t isqrt(std::uint64_t x) {
    if (x == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

/// Exact binomial coefficient in 64 bits; throws on overflow.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: product of i consecutive integers is divisible by i!
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial_u64: overflow");
    }
    return static_cast<std::uint64_t>(r);
}

/// q^e in 64 bits; throws on overflow.
inline std::uint64_t pow_u64(std::uint64_t q, std::uint64_t e) {
    unsigned __int128 r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        r *= q;
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("pow_u64: overflow");
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace cpcodes

#endif
