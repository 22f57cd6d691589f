#pragma once

#include <cmath>
#include <vector>

#include "frolov/basis.hpp"
#include "frolov/errors.hpp"

namespace frolov {

inline constexpr long long kDefaultBudget = 1'000'000'000;

// Node enumeration is exponential in d, so anything past this is out of
// reach anyway; the cap lets hot loops use fixed-size stack buffers.
inline constexpr int kMaxDim = 16;

struct Box {
    std::vector<double> lo, hi;

    int dim() const { return static_cast<int>(lo.size()); }

    double volume() const {
        double v = 1.0;
        for (size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
        return v;
    }
};

inline Box unit_box(int d) {
    Box b;
    b.lo.assign(d, 0.0);
    b.hi.assign(d, 1.0);
    return b;
}

inline void validate_box(const Box& box, int d) {
    if (box.dim() != d || static_cast<int>(box.hi.size()) != d)
        throw DomainError("box dimension does not match the basis");
    for (int i = 0; i < d; ++i)
        if (!(box.lo[i] < box.hi[i]) || !std::isfinite(box.lo[i]) || !std::isfinite(box.hi[i]))
            throw DomainError("box must have finite positive side lengths");
}

namespace detail {

// Shared odometer loop: iterates integer vectors of [lo[0],hi[0]] x ... in
// lexicographic order and calls visit(m). Bounds are inclusive.
template <class Visit>
void scan_integer_box(const std::vector<long long>& lo, const std::vector<long long>& hi, Visit&& visit) {
    const int d = static_cast<int>(lo.size());
    std::vector<long long> m(lo);
    for (;;) {
        visit(m);
        int k = d - 1;
        while (k >= 0 && m[k] == hi[k]) {
            m[k] = lo[k];
            --k;
        }
        if (k < 0) break;
        ++m[k];
    }
}

inline long long checked_candidate_count(const std::vector<long long>& lo,
                                         const std::vector<long long>& hi,
                                         long long budget, const char* who) {
    __int128 total = 1;
    for (size_t i = 0; i < lo.size(); ++i) {
        total *= static_cast<__int128>(hi[i] - lo[i] + 1);
        if (total > budget)
            throw BudgetExceeded(std::string(who) + ": candidate bounding box exceeds budget");
    }
    return static_cast<long long>(total);
}

} // namespace detail

// Number of points of the scaled dual lattice a*B(Z^d) inside the closed
// box. Candidates come from the preimage of the box corners under a*B
// (that is (1/a) * B^{-1} applied cornerwise, and B^{-1} = T^T).
inline long long count_dual_in_box(const FrolovBasis& basis, double a, const Box& box,
                                   long long budget = kDefaultBudget) {
    validate_box(box, basis.d);
    if (!(a > 0.0)) throw DomainError("count_dual_in_box: scale a must be positive");
    const int d = basis.d;

    std::vector<long long> mlo(d), mhi(d);
    for (int j = 0; j < d; ++j) {
        long double mn = 0.0L, mx = 0.0L;
        for (int i = 0; i < d; ++i) {
            // row j of B^{-1} = T^T, i.e. column j of T
            const long double c = basis.t(i, j) / a;
            const long double v0 = c * box.lo[i], v1 = c * box.hi[i];
            mn += std::min(v0, v1);
            mx += std::max(v0, v1);
        }
        mlo[j] = static_cast<long long>(std::floor(static_cast<double>(mn))) - 1;
        mhi[j] = static_cast<long long>(std::ceil(static_cast<double>(mx))) + 1;
    }
    detail::checked_candidate_count(mlo, mhi, budget, "count_dual_in_box");

    long long count = 0;
    detail::scan_integer_box(mlo, mhi, [&](const std::vector<long long>& m) {
        for (int i = 0; i < d; ++i) {
            long double s = 0.0L;
            for (int j = 0; j < d; ++j) s += basis.b(i, j) * m[j];
            const double y = static_cast<double>(a * s);
            if (!(y >= box.lo[i] && y <= box.hi[i])) return;
        }
        ++count;
    });
    return count;
}

} // namespace frolov
