#pragma once

#include <cmath>
#include <vector>

#include "frolov/basis.hpp"
#include "frolov/box.hpp"
#include "frolov/errors.hpp"

namespace frolov {

struct CellCountRecord {
    long long M = 0;  // open unit cells meeting the scaled parallelepiped
    double C = 0.0;   // a^{-d} |det T| M, approaches 1 from above as a grows
};

namespace detail {

// Generalized cross product of d-1 vectors in R^d: coordinate r is the
// signed (d-1)x(d-1) minor with coordinate r struck out. Only d <= 4 is
// needed, so the minors stop at 3x3.
inline std::vector<double> generalized_cross(const std::vector<const double*>& v, int d) {
    std::vector<double> n(d, 0.0);
    const int k = d - 1;
    double m[3][3];
    for (int r = 0; r < d; ++r) {
        for (int p = 0; p < k; ++p) {
            int qq = 0;
            for (int c = 0; c < d; ++c) {
                if (c == r) continue;
                m[p][qq++] = v[p][c];
            }
        }
        double det = 1.0;
        if (k == 1) {
            det = m[0][0];
        } else if (k == 2) {
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        } else {
            det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        }
        n[r] = (r % 2 ? -det : det);
    }
    return n;
}

} // namespace detail

// Counts the open unit cells z + (0,1)^d, z integer, that meet the closed
// parallelepiped a T^{-1}([0,1]^d) spanned by the rows of a B. A cell meets
// the body iff no axis separates them; for two zonotopes the complete axis
// set is the generalized cross products of (d-1)-subsets drawn from both
// generator lists, here {e_i} and the rows of a B. That replaces the
// vertex-plus-subdivision route with an exact test.
inline CellCountRecord cell_count(const FrolovBasis& basis, double a,
                                  long long budget = kDefaultBudget) {
    const int d = basis.d;
    if (!(a > 1.0)) throw DomainError("cell_count: scale a must exceed 1");
    if (d > 4) throw DomainError("cell_count: supported for d <= 4 only");

    std::vector<std::vector<double>> gen(d, std::vector<double>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gen[i][j] = static_cast<double>(static_cast<long double>(a) * basis.b(i, j));

    std::vector<std::vector<double>> pool;
    for (int i = 0; i < d; ++i) {
        std::vector<double> e(d, 0.0);
        e[i] = 1.0;
        pool.push_back(std::move(e));
    }
    for (int i = 0; i < d; ++i) pool.push_back(gen[i]);

    std::vector<std::vector<double>> axes;
    if (d == 1) {
        axes.push_back({1.0});
    } else {
        const int k = d - 1, pn = 2 * d;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::vector<const double*> sel(k);
            double scale = 1.0;
            for (int i = 0; i < k; ++i) {
                sel[i] = pool[idx[i]].data();
                double mx = 0.0;
                for (int c = 0; c < d; ++c) mx = std::max(mx, std::fabs(sel[i][c]));
                scale *= mx;
            }
            std::vector<double> n = detail::generalized_cross(sel, d);
            double nmax = 0.0;
            for (double c : n) nmax = std::max(nmax, std::fabs(c));
            if (nmax > 1e-12 * scale) axes.push_back(std::move(n));

            int p = k - 1;
            while (p >= 0 && idx[p] == pn - k + p) --p;
            if (p < 0) break;
            ++idx[p];
            for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
        }
    }

    // Per axis: body projection [pl, ph] (base corner at the origin) and the
    // cell extent [nlo, nhi] to add onto n.z.
    struct Axis {
        std::vector<double> n;
        double pl, ph, nlo, nhi;
    };
    std::vector<Axis> prepared;
    prepared.reserve(axes.size());
    for (auto& n : axes) {
        Axis ax;
        ax.pl = ax.ph = 0.0;
        for (int i = 0; i < d; ++i) {
            double t = 0.0;
            for (int c = 0; c < d; ++c) t += n[c] * gen[i][c];
            ax.pl += std::min(0.0, t);
            ax.ph += std::max(0.0, t);
        }
        ax.nlo = ax.nhi = 0.0;
        for (int c = 0; c < d; ++c) {
            ax.nlo += std::min(0.0, n[c]);
            ax.nhi += std::max(0.0, n[c]);
        }
        ax.n = std::move(n);
        prepared.push_back(std::move(ax));
    }

    std::vector<long long> zlo(d), zhi(d);
    for (int j = 0; j < d; ++j) {
        double lo = 0.0, hi = 0.0;
        for (int i = 0; i < d; ++i) {
            lo += std::min(0.0, gen[i][j]);
            hi += std::max(0.0, gen[i][j]);
        }
        zlo[j] = static_cast<long long>(std::floor(lo)) - 1;
        zhi[j] = static_cast<long long>(std::ceil(hi)) + 1;
    }
    detail::checked_candidate_count(zlo, zhi, budget, "cell_count");

    long long hits = 0;
    detail::scan_integer_box(zlo, zhi, [&](const std::vector<long long>& z) {
        for (const Axis& ax : prepared) {
            double base = 0.0;
            for (int c = 0; c < d; ++c) base += ax.n[c] * z[c];
            // open cell (base+nlo, base+nhi) against closed body [pl, ph]
            if (!(base + ax.nhi > ax.pl && base + ax.nlo < ax.ph)) return;
        }
        ++hits;
    });

    CellCountRecord rec;
    rec.M = hits;
    rec.C = static_cast<double>(
        static_cast<long double>(hits) *
        std::pow(static_cast<long double>(a), static_cast<long double>(-d)) /
        std::fabs(basis.detB));
    return rec;
}

} // namespace frolov
