#pragma once

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "frolov/basis.hpp"
#include "frolov/errors.hpp"
#include "frolov/format.hpp"
#include "frolov/rule.hpp"
#include "frolov/test_functions.hpp"

namespace frolov {

struct ConvergenceRecord {
    double a = 0.0;
    long long n = 0;      // node count
    double error = 0.0;   // |estimate - exact integral|
    double bound = 0.0;   // worst-case bound at this scale
    double seconds = 0.0; // wall time for build + integrate
};

// One record per grid point: build the rule at scale a, integrate, compare
// against the certified integral, and attach the worst-case bound for the
// given smoothness.
inline std::vector<ConvergenceRecord> convergence_study(const FrolovBasis& basis,
                                                        const TestFunction& f, int s,
                                                        const std::vector<double>& a_grid,
                                                        Mode mode = Mode::Vanishing,
                                                        long long budget = kDefaultBudget) {
    if (a_grid.empty()) throw DomainError("convergence_study: empty a-grid");
    for (size_t i = 0; i < a_grid.size(); ++i) {
        if (!(a_grid[i] > 1.0)) throw DomainError("convergence_study: grid scales must exceed 1");
        if (i > 0 && !(a_grid[i] > a_grid[i - 1]))
            throw DomainError("convergence_study: a-grid must be strictly increasing");
    }
    if (s < 1) throw DomainError("convergence_study: smoothness s must be >= 1");

    std::vector<ConvergenceRecord> out;
    out.reserve(a_grid.size());
    for (double a : a_grid) {
        const auto t0 = std::chrono::steady_clock::now();
        const CubatureRule rule = build_rule(basis, a, mode, mode == Mode::Periodized ? s : 0,
                                             budget);
        const double estimate = integrate(rule, f);
        const auto t1 = std::chrono::steady_clock::now();
        ConvergenceRecord rec;
        rec.a = a;
        rec.n = rule.nodes.count;
        rec.error = std::fabs(estimate - f.exact_integral);
        rec.bound = theoretical_bound(s, basis.d, a);
        rec.seconds = std::chrono::duration<double>(t1 - t0).count();
        out.push_back(rec);
    }
    return out;
}

// Least-squares slope of log error against log n. Errors below 1e-14 sit at
// the compensated-summation noise floor and would corrupt the fit, so they
// are dropped; at least 3 usable records must remain.
inline double fit_order(const std::vector<ConvergenceRecord>& records) {
    std::vector<long double> xs, ys;
    for (const auto& r : records) {
        if (!(r.error >= 1e-14) || r.n < 1) continue;
        xs.push_back(std::log(static_cast<long double>(r.n)));
        ys.push_back(std::log(static_cast<long double>(r.error)));
    }
    if (xs.size() < 3)
        throw InsufficientData("fit_order: need at least 3 records above the noise floor");
    const size_t n = xs.size();
    long double mx = 0.0L, my = 0.0L;
    for (size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    long double sxx = 0.0L, sxy = 0.0L;
    for (size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0L) throw InsufficientData("fit_order: degenerate grid (all n equal)");
    return static_cast<double>(sxy / sxx);
}

inline void write_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records) {
    os << "a,n,error,bound,seconds\n";
    for (const auto& r : records) {
        os << format_real(r.a) << ',' << r.n << ',' << format_real(r.error) << ','
           << format_real(r.bound) << ',' << format_real(r.seconds) << '\n';
    }
}

// Inverse of write_csv; 17 significant digits are enough for the doubles to
// come back bit-exact.
inline std::vector<ConvergenceRecord> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "a,n,error,bound,seconds")
        throw DomainError("read_csv: missing or unexpected header");
    std::vector<ConvergenceRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        size_t pos = 0;
        while (true) {
            size_t next = line.find(',', pos);
            if (next == std::string::npos) {
                cells.push_back(line.substr(pos));
                break;
            }
            cells.push_back(line.substr(pos, next - pos));
            pos = next + 1;
        }
        if (cells.size() != 5) throw DomainError("read_csv: expected 5 columns");
        auto to_double = [](const std::string& s) {
            char* end = nullptr;
            const double v = std::strtod(s.c_str(), &end);
            if (end == s.c_str() || *end != '\0') throw DomainError("read_csv: bad number '" + s + "'");
            return v;
        };
        auto to_count = [](const std::string& s) {
            char* end = nullptr;
            const long long v = std::strtoll(s.c_str(), &end, 10);
            if (end == s.c_str() || *end != '\0') throw DomainError("read_csv: bad count '" + s + "'");
            return v;
        };
        ConvergenceRecord rec;
        rec.a = to_double(cells[0]);
        rec.n = to_count(cells[1]);
        rec.error = to_double(cells[2]);
        rec.bound = to_double(cells[3]);
        rec.seconds = to_double(cells[4]);
        out.push_back(rec);
    }
    return out;
}

} // namespace frolov
