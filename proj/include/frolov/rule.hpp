#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frolov/basis.hpp"
#include "frolov/box.hpp"
#include "frolov/errors.hpp"
#include "frolov/node_set.hpp"
#include "frolov/parallel.hpp"
#include "frolov/periodization.hpp"
#include "frolov/polylog.hpp"
#include "frolov/summation.hpp"
#include "frolov/test_functions.hpp"

namespace frolov {

// Vanishing: apply the rule as-is; correct rates need integrands that vanish
// on the cube boundary. Periodized: pre-compose with the polynomial change
// of variable so any smooth integrand works on the unit cube.
enum class Mode { Vanishing, Periodized };

inline const char* mode_name(Mode m) {
    return m == Mode::Vanishing ? "vanishing" : "periodized";
}

struct CubatureRule {
    FrolovBasis basis;
    double a = 0.0;
    Box domain;
    Mode mode = Mode::Vanishing;
    int s = 0;                          // periodization order, 0 in Vanishing mode
    std::optional<PeriodizationMap> map;
    NodeSet nodes;
    double weight = 0.0;                // common node weight a^{-d} |det T|
};

inline CubatureRule build_rule(const FrolovBasis& basis, double a, const Box& domain,
                               Mode mode = Mode::Vanishing, int s = 0,
                               long long budget = kDefaultBudget) {
    if (!(a > 1.0)) throw DomainError("build_rule: scale a must exceed 1");
    validate_box(domain, basis.d);
    if (mode == Mode::Periodized) {
        if (s < 1) throw DomainError("build_rule: periodized mode needs order s >= 1");
        if (basis.d > kMaxDim) throw DomainError("build_rule: dimension too large");
        for (int i = 0; i < basis.d; ++i)
            if (domain.lo[i] != 0.0 || domain.hi[i] != 1.0)
                throw DomainError("build_rule: periodized mode is defined on the unit cube");
    }
    CubatureRule rule;
    rule.basis = basis;
    rule.a = a;
    rule.domain = domain;
    rule.mode = mode;
    rule.s = (mode == Mode::Periodized) ? s : 0;
    if (mode == Mode::Periodized) rule.map.emplace(s);
    rule.nodes = enumerate_nodes(basis, a, domain, budget);
    rule.weight = static_cast<double>(
        std::pow(static_cast<long double>(a), static_cast<long double>(-basis.d)) /
        std::fabs(basis.detB));
    return rule;
}

inline CubatureRule build_rule(const FrolovBasis& basis, double a,
                               Mode mode = Mode::Vanishing, int s = 0,
                               long long budget = kDefaultBudget) {
    return build_rule(basis, a, unit_box(basis.d), mode, s, budget);
}

namespace detail {

template <typename F>
inline double accumulate_over_nodes(const NodeSet& nodes, bool reentrant, F&& value_at) {
    const long long n = nodes.count;
    const int workers = thread_count();
    // Parallel map into a buffer, then one sequential compensated reduction
    // in node order: the result is identical for every worker count.
    if (reentrant && workers > 1 && n >= 16384) {
        std::vector<double> vals(static_cast<size_t>(n));
        parallel_slices(n, workers, [&](long long b, long long e, int) {
            for (long long i = b; i < e; ++i) vals[static_cast<size_t>(i)] = value_at(i);
        });
        NeumaierSum acc;
        for (double v : vals) acc.add(v);
        return acc.value();
    }
    NeumaierSum acc;
    for (long long i = 0; i < n; ++i) acc.add(value_at(i));
    return acc.value();
}

} // namespace detail

// Equal-weight sum over the scaled lattice points. In periodized mode the
// integrand is composed with the coordinate-wise map and multiplied by its
// Jacobian. Any non-finite sample aborts the sum.
inline double integrate(const CubatureRule& rule, const TestFunction& f,
                        long long = kDefaultBudget) {
    if (f.d != rule.basis.d)
        throw DomainError("integrate: function dimension " + std::to_string(f.d) +
                          " does not match rule dimension " + std::to_string(rule.basis.d));
    const int d = rule.basis.d;
    const NodeSet& nodes = rule.nodes;

    auto value_at = [&](long long i) {
        double v;
        if (rule.mode == Mode::Periodized) {
            const auto x = nodes.point(i);
            double mapped[kMaxDim];
            double jac = 1.0;
            for (int j = 0; j < d; ++j) {
                mapped[j] = rule.map->psi(x[j]);
                jac *= rule.map->dpsi(x[j]);
            }
            v = f.evaluator(std::span<const double>(mapped, static_cast<size_t>(d))) * jac;
        } else {
            v = f.evaluator(nodes.point(i));
        }
        if (!std::isfinite(v)) throw NonFiniteValue("integrate: non-finite sample value");
        return v;
    };

    const double total = detail::accumulate_over_nodes(nodes, f.reentrant, value_at);
    return rule.weight * total;
}

// Worst-case bound c_{s,d} a^{-s d} (log2 a^d)^{(d-1)/2} with the explicit
// constant c_{s,d} = 2^{d+2s+1} sqrt(sum_l l^{d-1} 2^{(1-2s) l}). Only
// meaningful once a^d > 1 so the log factor is positive.
inline double bound_constant(int s, int d) {
    if (s < 1 || d < 1) throw DomainError("bound_constant: s and d must be >= 1");
    const double tail = polylog_negative_order(d - 1, std::ldexp(1.0, 1 - 2 * s));
    return std::ldexp(std::sqrt(tail), d + 2 * s + 1);
}

inline double theoretical_bound(int s, int d, double a) {
    const double c = bound_constant(s, d);
    const double log_n = d * std::log2(a);
    if (!(log_n > 0.0)) throw DomainError("theoretical_bound: need a^d > 1");
    return c * std::pow(a, -static_cast<double>(s) * d) *
           std::pow(log_n, (d - 1) / 2.0);
}

// Compose an evaluator with the periodizing map. The wrapped function has
// the same integral over the unit cube and vanishes at the boundary to the
// order of the map.
inline std::function<double(std::span<const double>)>
periodize(std::function<double(std::span<const double>)> eval, int s, int d) {
    if (d < 1 || d > kMaxDim) throw DomainError("periodize: bad dimension");
    PeriodizationMap map(s);
    return [map, eval = std::move(eval), d](std::span<const double> x) {
        double mapped[kMaxDim];
        double jac = 1.0;
        for (int j = 0; j < d; ++j) {
            mapped[j] = map.psi(x[j]);
            jac *= map.dpsi(x[j]);
        }
        return eval(std::span<const double>(mapped, static_cast<size_t>(d))) * jac;
    };
}

inline TestFunction periodize(const TestFunction& f, int s) {
    if (s < 1) throw DomainError("periodize: order s must be >= 1");
    TestFunction g;
    g.name = f.name + "#periodized";
    g.d = f.d;
    g.s = s;
    g.exact_integral = f.exact_integral;
    g.vanishing = true;
    g.reentrant = f.reentrant;
    g.evaluator = periodize(f.evaluator, s, f.d);
    return g; // factor transform does not survive the substitution
}

} // namespace frolov
