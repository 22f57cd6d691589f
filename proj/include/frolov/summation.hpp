#pragma once

#include <cmath>

namespace frolov {

// Kahan-Babuska-Neumaier compensated accumulator. Node sums reach 10^6+
// terms while the studied errors go down to 1e-10, so the naive sum's
// O(n*eps) drift would show up in measured convergence orders.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace frolov
