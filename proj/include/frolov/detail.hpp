#pragma once

#include <cstdint>

namespace frolov::detail {

// Small exact integer helpers shared by the polynomial and periodization
// code. All values stay far below 2^63 for the supported parameter ranges.

inline unsigned long long binomial_ull(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact at every step: r*(n-k+i) is divisible by i
    }
    return r;
}

// (2d-1)!! = 1*3*5*...*(2d-1); fits in long long for d <= 16.
inline long long odd_double_factorial(int d) {
    long long r = 1;
    for (int j = 1; j <= d; ++j) r *= 2 * j - 1;
    return r;
}

// (2s+1)!/(s!)^2 = (2s+1)*binom(2s,s); the normalizer that makes
// t^s (1-t)^s integrate to 1 over [0,1].
inline unsigned long long beta_normalizer(int s) {
    return (2ull * s + 1ull) * binomial_ull(2 * s, s);
}

} // namespace frolov::detail
