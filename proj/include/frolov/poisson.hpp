#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "frolov/basis.hpp"
#include "frolov/box.hpp"
#include "frolov/errors.hpp"
#include "frolov/node_set.hpp"
#include "frolov/summation.hpp"
#include "frolov/test_functions.hpp"

namespace frolov {

struct PoissonRecord {
    double node_sum = 0.0;   // a^{-d} |det T| sum of f over lattice nodes in [0,1)^d
    double dual_sum = 0.0;   // sum of the transform over dual points with |m|_inf <= M
    double discrepancy = 0.0;
};

// Summation-formula cross-check: the weighted node sum over the lattice
// restricted to the unit cube equals the sum of the transform over the dual
// lattice, up to the tail beyond the |m|_inf <= M window. Needs a function
// with a closed-form factor transform and works for any a > 0 (a = 1 uses
// the unscaled lattice).
inline PoissonRecord poisson_check(const FrolovBasis& basis, double a, const TestFunction& f,
                                   long long window, long long budget = kDefaultBudget) {
    if (f.d != basis.d) throw DomainError("poisson_check: function dimension mismatch");
    if (!f.transform) throw UnsupportedFunction("poisson_check: '" + f.name +
                                                "' has no closed-form factor transform");
    if (window < 0) throw DomainError("poisson_check: window must be >= 0");
    const int d = basis.d;

    PoissonRecord rec;
    {
        const NodeSet nodes = enumerate_nodes(basis, a, unit_box(d), budget);
        NeumaierSum acc;
        for (long long i = 0; i < nodes.count; ++i) acc.add(f.evaluator(nodes.point(i)));
        const long double w = std::pow(static_cast<long double>(a), static_cast<long double>(-d)) /
                              std::fabs(basis.detB);
        rec.node_sum = static_cast<double>(w * acc.value());
    }

    long long terms = 1;
    for (int i = 0; i < d; ++i) {
        terms *= 2 * window + 1;
        if (terms > budget) throw BudgetExceeded("poisson_check: dual window too large");
    }

    // Terms at m and -m are complex conjugates (f is real), so the imaginary
    // parts cancel exactly; only the real parts are accumulated.
    std::vector<long long> m(d, -window);
    NeumaierSum re;
    for (long long t = 0; t < terms; ++t) {
        std::complex<double> term = 1.0;
        for (int i = 0; i < d; ++i) {
            long double y = 0.0L;
            for (int j = 0; j < d; ++j) y += static_cast<long double>(a) * basis.b(i, j) * m[j];
            term *= f.transform(static_cast<double>(y));
        }
        re.add(term.real());
        for (int i = d - 1; i >= 0; --i) {
            if (++m[i] <= window) break;
            m[i] = -window;
        }
    }
    rec.dual_sum = re.value();
    rec.discrepancy = std::fabs(rec.node_sum - rec.dual_sum);
    return rec;
}

} // namespace frolov
