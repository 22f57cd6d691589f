#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "frolov/detail.hpp"
#include "frolov/errors.hpp"
#include "frolov/polynomial.hpp"

namespace frolov {

struct RootSet {
    int d = 0;
    std::vector<long double> roots; // strictly decreasing
    long double residual = 0.0L;    // max |P(root)| after polishing
};

namespace detail {

// One bisection-plus-Newton polish inside a bracketing interval.
inline long double polish_root(const FrolovPolynomial& p, long double lo, long double hi) {
    long double flo = evaluate_poly(p, lo);
    if (flo == 0.0L) return lo;
    if (evaluate_poly(p, hi) == 0.0L) return hi;
    while (hi - lo > 1e-10L) {
        long double mid = 0.5L * (lo + hi);
        long double fm = evaluate_poly(p, mid);
        if (fm == 0.0L) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    long double x = 0.5L * (lo + hi);
    for (int it = 0; it < 12; ++it) {
        long double f = evaluate_poly(p, x);
        long double df = evaluate_poly_derivative(p, x);
        if (df == 0.0L) break;
        long double step = f / df;
        long double next = x - step;
        if (next < lo || next > hi) break; // stay inside the bracket
        x = next;
        if (std::fabs(step) < 1e-18L * std::max(1.0L, std::fabs(x))) break;
    }
    return x;
}

} // namespace detail

// Real roots of the generator polynomial, largest first. Standard roots are
// bracketed by sign changes on a refining grid over [-1, 2d] (they all lie
// there: each sits near one of the odd abscissae), then bisected and Newton
// polished in extended precision. Chebyshev roots have a closed form.
inline RootSet find_roots(const FrolovPolynomial& p) {
    RootSet out;
    out.d = p.d;

    if (p.kind == Kind::Chebyshev) {
        const long double pi = 3.14159265358979323846264338327950288L;
        for (int i = 1; i <= p.d; ++i)
            out.roots.push_back(2.0L * std::cos(pi * (2 * i - 1) / (2.0L * p.d)));
    } else {
        // All roots sit in (-1, 2d]: one near each odd abscissa, the largest
        // in (2d-1, 2d]. Widen the right end so the d=1 root at exactly 2
        // stays interior and grid points never land on a root.
        const long double lo = -1.0L, hi = 2.0L * p.d + 0.5L;
        long long n = 64LL * p.d;
        std::vector<std::pair<long double, long double>> brackets;
        for (;;) {
            brackets.clear();
            const long double h = (hi - lo) / n;
            long double x0 = lo, f0 = evaluate_poly(p, x0);
            for (long long i = 1; i <= n && static_cast<long long>(brackets.size()) < p.d; ++i) {
                long double x1 = lo + h * i, f1 = evaluate_poly(p, x1);
                if (f0 == 0.0L)
                    brackets.emplace_back(x0, x0);
                else if ((f0 > 0) != (f1 > 0))
                    brackets.emplace_back(x0, x1);
                x0 = x1;
                f0 = f1;
            }
            if (static_cast<long long>(brackets.size()) == p.d) break;
            if (h < 1e-6L)
                throw RootCountMismatch("find_roots: found " + std::to_string(brackets.size()) +
                                        " sign changes for d=" + std::to_string(p.d) +
                                        " at minimum grid spacing");
            n *= 2;
        }
        for (auto [a, b] : brackets)
            out.roots.push_back(a == b ? a : detail::polish_root(p, a, b));
        std::sort(out.roots.begin(), out.roots.end(), std::greater<>());
    }

    for (long double r : out.roots)
        out.residual = std::max(out.residual, std::fabs(evaluate_poly(p, r)));
    return out;
}

// Necessary-condition check for irreducibility of the Standard polynomial:
// a monic integer polynomial can only have integer rational roots, and any
// such root divides the constant term. Returns true when no divisor of the
// constant term is a root. d=1 is the documented degenerate case (the root
// is 2) and reports false; callers skip it.
inline bool rational_root_sanity(const FrolovPolynomial& p) {
    if (p.kind != Kind::Standard)
        throw DomainError("rational_root_sanity: Standard kind only");
    if (p.d > 12)
        throw DomainError("rational_root_sanity: supported for d <= 12");
    if (p.d == 1) return false;

    // constant term: (-1)^d (2d-1)!! - 1
    long long c0 = detail::odd_double_factorial(p.d);
    if (p.d % 2 != 0) c0 = -c0;
    c0 -= 1;
    unsigned long long m = static_cast<unsigned long long>(c0 < 0 ? -c0 : c0);

    std::vector<unsigned long long> divisors{1};
    for (unsigned long long f = 2; f * f <= m; ++f) {
        if (m % f != 0) continue;
        int mult = 0;
        while (m % f == 0) {
            m /= f;
            ++mult;
        }
        const size_t base = divisors.size();
        unsigned long long pw = 1;
        for (int e = 1; e <= mult; ++e) {
            pw *= f;
            for (size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pw);
        }
    }
    if (m > 1) {
        const size_t base = divisors.size();
        for (size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * m);
    }

    for (unsigned long long dv : divisors) {
        for (long long sign : {1LL, -1LL}) {
            const long long t = sign * static_cast<long long>(dv);
            ExactValue v = evaluate_poly_product_exact(p, t);
            if (!v.huge && v.value == 1) return false; // product == 1 means P(t) == 0
        }
    }
    return true;
}

} // namespace frolov
