#pragma once

#include <cmath>
#include <vector>

#include "frolov/detail.hpp"
#include "frolov/errors.hpp"

namespace frolov {

// The smooth change of variables psi_s(t) = int_0^t u^s(1-u)^s du, scaled
// so psi_s(1) = 1. Composing an integrand with psi per coordinate and
// multiplying by the psi' factors keeps the integral and makes the result
// vanish to order s at the cube boundary, which is what the plain rule
// needs. The polynomial coefficients are exact rationals evaluated once.
struct PeriodizationMap {
    int s = 0;
    long double norm = 0.0L;        // (2s+1)!/(s!)^2
    std::vector<long double> coef;  // psi(t) = t^{s+1} * sum_k coef[k] t^k on [0, 1/2]

    explicit PeriodizationMap(int smoothness) : s(smoothness) {
        if (s < 1) throw DomainError("PeriodizationMap: s must be >= 1");
        if (s > 20) throw DomainError("PeriodizationMap: s > 20 exceeds exact-coefficient range");
        norm = static_cast<long double>(detail::beta_normalizer(s));
        coef.resize(s + 1);
        for (int k = 0; k <= s; ++k) {
            const long double b = static_cast<long double>(detail::binomial_ull(s, k));
            coef[k] = (k % 2 ? -1.0L : 1.0L) * norm * b / (s + k + 1);
        }
    }

    // Evaluated through the reflection psi(1-t) = 1 - psi(t); the raw
    // alternating series is only used on [0, 1/2] where it cannot cancel
    // catastrophically.
    double psi(double t) const {
        if (t > 0.5) return 1.0 - psi_raw(1.0L - static_cast<long double>(t));
        return psi_raw(t);
    }

    double dpsi(double t) const {
        const long double u = t;
        return static_cast<double>(norm * std::pow(u * (1.0L - u), static_cast<long double>(s)));
    }

  private:
    double psi_raw(long double t) const {
        long double acc = 0.0L;
        for (int k = s; k >= 0; --k) acc = acc * t + coef[k];
        return static_cast<double>(acc * std::pow(t, static_cast<long double>(s + 1)));
    }
};

} // namespace frolov
