#pragma once

#include <cmath>
#include <cstdlib>
#include <span>
#include <vector>

#include "frolov/errors.hpp"
#include "frolov/linalg.hpp"
#include "frolov/roots.hpp"

namespace frolov {

// Static lattice data for one dimension: the polynomial roots, the dual
// generator B (Vandermonde in the roots), the lattice generator T with
// B^T T = I, and the determinants. detT = 1/detB may be negative; weights
// and counts always use the absolute values.
struct FrolovBasis {
    int d = 0;
    Kind kind = Kind::Standard;
    RootSet roots;
    std::vector<long double> B; // row-major, B[i][j] = roots[i]^j
    std::vector<long double> T;
    long double detB = 0.0L;
    long double detT = 0.0L;
    long double absDetTinv = 0.0L; // = |detB|

    long double b(int i, int j) const { return B[i * d + j]; }
    long double t(int i, int j) const { return T[i * d + j]; }
};

inline FrolovBasis build_basis(int d, Kind kind = Kind::Standard) {
    FrolovBasis basis;
    basis.d = d;
    basis.kind = kind;
    basis.roots = find_roots(FrolovPolynomial(d, kind));

    basis.B.resize(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        long double pw = 1.0L;
        for (int j = 0; j < d; ++j) {
            basis.B[i * d + j] = pw;
            pw *= basis.roots.roots[i];
        }
    }

    // T solves B^T T = I column by column; the determinant falls out of the
    // same factorization instead of a separate cofactor pass.
    const LU lu = LU::factor(basis.B, d);
    basis.detB = lu.det();
    basis.detT = 1.0L / basis.detB;
    basis.absDetTinv = std::fabs(basis.detB);
    basis.T.resize(static_cast<size_t>(d) * d);
    std::vector<long double> col(d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) col[i] = (i == j) ? 1.0L : 0.0L;
        lu.solve_transpose(col);
        for (int i = 0; i < d; ++i) basis.T[i * d + j] = col[i];
    }
    return basis;
}

// Scaled dual lattice point a*B*m.
inline std::vector<double> dual_point(const FrolovBasis& basis, std::span<const long long> m, double a) {
    std::vector<double> y(basis.d);
    for (int i = 0; i < basis.d; ++i) {
        long double s = 0.0L;
        for (int j = 0; j < basis.d; ++j) s += basis.b(i, j) * m[j];
        y[i] = static_cast<double>(a * s);
    }
    return y;
}

struct ProductCheck {
    long double product = 0.0L;
    long double nearest_integer = 0.0L; // integral-valued; exceeds 2^63 for large ||m||, hence not an int64
    bool ok = false;
};

// The admissibility workhorse: for any nonzero integer vector m, the
// coordinate product of B*m is a nonzero integer (the field norm of an
// algebraic integer). Snap tolerance is relative because root error gets
// amplified by roughly d*||m|| through the product.
inline ProductCheck check_product_integrality(const FrolovBasis& basis, std::span<const long long> m) {
    bool all_zero = true;
    for (long long v : m)
        if (v != 0) all_zero = false;
    if (all_zero) throw ZeroVector("check_product_integrality: m must be nonzero");

    ProductCheck r;
    r.product = 1.0L;
    bool coordinate_zero = false;
    for (int i = 0; i < basis.d; ++i) {
        long double z = 0.0L;
        for (int j = 0; j < basis.d; ++j) z += basis.b(i, j) * m[j];
        if (z == 0.0L) coordinate_zero = true;
        r.product *= z;
    }
    r.nearest_integer = std::round(r.product);
    r.ok = !coordinate_zero && r.nearest_integer != 0.0L &&
           std::fabs(r.product - r.nearest_integer) <=
               1e-6L * std::max(1.0L, std::fabs(r.product));
    return r;
}

} // namespace frolov
