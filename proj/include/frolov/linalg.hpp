#pragma once

#include <cmath>
#include <vector>

#include "frolov/errors.hpp"

namespace frolov {

// Dense LU with partial pivoting over long double, for the d x d generator
// matrices (d <= 16). The Vandermonde systems get ill-conditioned as d
// grows, which is why everything here stays in extended precision; a
// hand-rolled kernel beats pulling in a matrix library for matrices this
// small. Row-major storage throughout.
struct LU {
    int n = 0;
    std::vector<long double> a; // packed L (unit diagonal) and U
    std::vector<int> piv;
    int sign = 1;

    static LU factor(std::vector<long double> m, int n) {
        LU lu;
        lu.n = n;
        lu.a = std::move(m);
        lu.piv.resize(n);
        auto& A = lu.a;
        for (int k = 0; k < n; ++k) {
            int p = k;
            long double best = std::fabs(A[k * n + k]);
            for (int i = k + 1; i < n; ++i) {
                long double v = std::fabs(A[i * n + k]);
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            if (best < 1e-300L)
                throw SingularMatrix("LU::factor: pivot vanished, matrix numerically singular");
            lu.piv[k] = p;
            if (p != k) {
                for (int j = 0; j < n; ++j) std::swap(A[k * n + j], A[p * n + j]);
                lu.sign = -lu.sign;
            }
            const long double inv = 1.0L / A[k * n + k];
            for (int i = k + 1; i < n; ++i) {
                const long double f = A[i * n + k] * inv;
                A[i * n + k] = f;
                for (int j = k + 1; j < n; ++j) A[i * n + j] -= f * A[k * n + j];
            }
        }
        return lu;
    }

    long double det() const {
        long double d = sign;
        for (int k = 0; k < n; ++k) d *= a[k * n + k];
        return d;
    }

    // Solve A x = b in place.
    void solve(std::vector<long double>& b) const {
        for (int k = 0; k < n; ++k)
            if (piv[k] != k) std::swap(b[k], b[piv[k]]);
        for (int i = 1; i < n; ++i) {
            long double s = b[i];
            for (int j = 0; j < i; ++j) s -= a[i * n + j] * b[j];
            b[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            long double s = b[i];
            for (int j = i + 1; j < n; ++j) s -= a[i * n + j] * b[j];
            b[i] = s / a[i * n + i];
        }
    }

    // Solve A^T x = b in place, reusing the same factorization:
    // A = P^T L U, so A^T = U^T L^T P.
    void solve_transpose(std::vector<long double>& b) const {
        for (int i = 0; i < n; ++i) {
            long double s = b[i];
            for (int j = 0; j < i; ++j) s -= a[j * n + i] * b[j];
            b[i] = s / a[i * n + i];
        }
        for (int i = n - 1; i >= 0; --i) {
            long double s = b[i];
            for (int j = i + 1; j < n; ++j) s -= a[j * n + i] * b[j];
            b[i] = s;
        }
        for (int k = n - 1; k >= 0; --k)
            if (piv[k] != k) std::swap(b[k], b[piv[k]]);
    }
};

} // namespace frolov
