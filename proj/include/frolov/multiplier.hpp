#pragma once

#include <numbers>
#include <span>

#include "frolov/errors.hpp"

namespace frolov {

// Parameters of the smoothness weight attached to dual lattice points:
// order s per coordinate in dimension d.
struct MultiplierParams {
    int s = 0;
    int d = 0;
};

// nu(y) = prod_j sum_{l=0}^{s} (2 pi |y_j|)^{2l}, the polynomial weight that
// converts decay of a transform into a mixed-smoothness norm. Even powers
// only, so each factor is a Horner evaluation in u = (2 pi y_j)^2.
inline double multiplier(const MultiplierParams& params, std::span<const double> y) {
    if (params.s < 1 || params.d < 1)
        throw DomainError("multiplier: need s >= 1 and d >= 1");
    if (static_cast<int>(y.size()) != params.d)
        throw DomainError("multiplier: point dimension mismatch");
    double prod = 1.0;
    for (int j = 0; j < params.d; ++j) {
        const double w = 2.0 * std::numbers::pi * y[j];
        const double u = w * w;
        double factor = 1.0;
        for (int l = 0; l < params.s; ++l) factor = 1.0 + u * factor;
        prod *= factor;
    }
    return prod;
}

} // namespace frolov
