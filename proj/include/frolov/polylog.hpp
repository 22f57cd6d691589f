#pragma once

#include <cmath>

#include "frolov/errors.hpp"

namespace frolov {

// Li_{-k}(z) = sum_{l>=1} l^k z^l for non-negative integer k and z in (0,1).
// The error-constant code only ever needs z = 2^{1-2s} <= 1/2, where the
// series converges geometrically; direct summation with a relative cutoff
// is both simple and accurate, no continuation machinery required.
inline double polylog_negative_order(int k, double z) {
    if (!(z > 0.0 && z < 1.0))
        throw DomainError("polylog_negative_order: z must lie in (0,1)");
    if (k < 0)
        throw DomainError("polylog_negative_order: order index k must be >= 0");

    const long double zl = z;
    long double sum = 0.0L, zpow = 1.0L;
    for (long long l = 1; l <= 10'000'000; ++l) {
        zpow *= zl;
        long double term = std::pow(static_cast<long double>(l), static_cast<long double>(k)) * zpow;
        sum += term;
        if (term < 1e-16L * sum) break;
    }
    return static_cast<double>(sum);
}

} // namespace frolov
