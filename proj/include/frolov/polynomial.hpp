#pragma once

#include <cmath>
#include <cstdint>

#include "frolov/detail.hpp"
#include "frolov/errors.hpp"

namespace frolov {

enum class Kind { Standard, Chebyshev };

inline const char* kind_name(Kind k) {
    return k == Kind::Standard ? "standard" : "chebyshev";
}

// The two generator polynomials. Standard is the shifted product
// P_d(t) = (t-1)(t-3)...(t-2d+1) - 1, kept in product form: expanded
// coefficients grow like (2d-1)!! and overflow 64-bit integers near d=16,
// and the product form is exact at integer arguments anyway. Chebyshev is
// the monic variant 2 cos(d arccos(t/2)), valid only when d is a power of
// two (that is when its root lattice is admissible).
struct FrolovPolynomial {
    int d;
    Kind kind;

    FrolovPolynomial(int dim, Kind k) : d(dim), kind(k) {
        if (d < 1)
            throw DomainError("FrolovPolynomial: dimension must be positive");
        if (kind == Kind::Chebyshev && (d & (d - 1)) != 0)
            throw DomainError("FrolovPolynomial: Chebyshev kind requires d to be a power of 2");
    }
};

inline long double evaluate_poly(const FrolovPolynomial& p, long double t) {
    if (p.kind == Kind::Standard) {
        long double prod = 1.0L;
        for (int j = 1; j <= p.d; ++j) prod *= t - static_cast<long double>(2 * j - 1);
        return prod - 1.0L;
    }
    if (std::fabs(t) <= 2.0L)
        return 2.0L * std::cos(static_cast<long double>(p.d) * std::acos(t * 0.5L));
    // Outside [-2,2] the trig form is undefined; continue with the monic
    // recurrence q0 = 2, q1 = t, q_{n+1} = t q_n - q_{n-1}.
    long double q0 = 2.0L, q1 = t;
    for (int n = 1; n < p.d; ++n) {
        long double q2 = t * q1 - q0;
        q0 = q1;
        q1 = q2;
    }
    return q1;
}

inline long double evaluate_poly_derivative(const FrolovPolynomial& p, long double t) {
    if (p.kind == Kind::Standard) {
        // d/dt prod(t - b_j) = sum_i prod_{j != i} (t - b_j)
        long double sum = 0.0L;
        for (int i = 1; i <= p.d; ++i) {
            long double prod = 1.0L;
            for (int j = 1; j <= p.d; ++j)
                if (j != i) prod *= t - static_cast<long double>(2 * j - 1);
            sum += prod;
        }
        return sum;
    }
    // Differentiated recurrence, valid on the whole line.
    long double q0 = 2.0L, q1 = t, dq0 = 0.0L, dq1 = 1.0L;
    for (int n = 1; n < p.d; ++n) {
        long double q2 = t * q1 - q0;
        long double dq2 = q1 + t * dq1 - dq0;
        q0 = q1; q1 = q2;
        dq0 = dq1; dq1 = dq2;
    }
    return p.d == 1 ? 1.0L : dq1;
}

// Exact integer evaluation of the Standard polynomial. The product is
// tracked in 128-bit arithmetic with a saturation flag: once |prod| clears
// the guard it can never come back to the small values the callers care
// about (the factors are distinct nonzero integers), so "huge" is as good
// as the exact value.
struct ExactValue {
    __int128 value; // P_d(t) + 1, i.e. the bare product, when !huge
    bool huge;
};

inline ExactValue evaluate_poly_product_exact(const FrolovPolynomial& p, long long t) {
    if (p.kind != Kind::Standard)
        throw DomainError("exact evaluation is defined for the Standard kind only");
    constexpr __int128 guard = static_cast<__int128>(1) << 80;
    __int128 prod = 1;
    for (int j = 1; j <= p.d; ++j)
        if (t == 2 * j - 1) return {0, false}; // a zero factor wins over saturation
    for (int j = 1; j <= p.d; ++j) {
        prod *= static_cast<__int128>(t) - (2 * j - 1);
        if (prod > guard || prod < -guard) return {0, true};
    }
    return {prod, false};
}

} // namespace frolov
