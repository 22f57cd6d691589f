#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "frolov/detail.hpp"
#include "frolov/errors.hpp"

namespace frolov {

// An integrand with certified metadata: the exact integral (closed form by
// construction), the smoothness budget it is good for, whether it vanishes
// on the cube boundary, and optionally the closed-form Fourier transform of
// its separable 1-D factor for dual-side summation checks.
struct TestFunction {
    std::string name;
    int d = 0;
    int s = 0;
    double exact_integral = 0.0;
    bool vanishing = false;
    bool reentrant = true;
    std::function<double(std::span<const double>)> evaluator;
    std::function<std::complex<double>(double)> transform; // factor transform, empty if none
};

namespace detail {

inline double pow_int(double base, int e) {
    double r = 1.0, b = base;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

// E(c) = int_0^1 exp(2 pi i c x) dx = exp(i pi c) * sinc(pi c); the product
// form avoids the 0/0 cancellation of (exp(2 pi i c) - 1)/(2 pi i c).
inline std::complex<double> interval_exponential_transform(double c) {
    const double x = std::numbers::pi * c;
    double sinc;
    if (std::fabs(x) < 1e-4) {
        const double x2 = x * x;
        sinc = 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    } else {
        sinc = std::sin(x) / x;
    }
    return std::polar(1.0, x) * sinc;
}

} // namespace detail

// Product of per-coordinate polynomial bumps c_p x^p (1-x)^p, normalized so
// each factor integrates to 1. Vanishing to order p at the boundary keeps
// the function inside the closure class for smoothness up to p.
inline TestFunction bump(int d, int p) {
    if (d < 1 || p < 1) throw DomainError("bump: d and p must be >= 1");
    if (p > 15) throw DomainError("bump: p > 15 exceeds exact-normalizer range");
    const double c = static_cast<double>(detail::beta_normalizer(p));
    TestFunction f;
    f.name = "bump";
    f.d = d;
    f.s = p;
    f.exact_integral = 1.0;
    f.vanishing = true;
    f.evaluator = [d, p, c](std::span<const double> x) {
        double v = 1.0;
        for (int i = 0; i < d; ++i) v *= c * detail::pow_int(x[i] * (1.0 - x[i]), p);
        return v;
    };
    return f;
}

// Product of sin^{2s}(pi x_j). The binomial expansion into complex
// exponentials gives the factor transform in closed form, which is what the
// dual-sum verification needs; the same expansion yields the exact integral
// binom(2s,s)/4^s per factor.
inline TestFunction sine_power(int d, int s) {
    if (d < 1 || s < 1) throw DomainError("sine_power: d and s must be >= 1");
    if (s > 15) throw DomainError("sine_power: s > 15 exceeds exact-coefficient range");
    const double mean = static_cast<double>(detail::binomial_ull(2 * s, s)) /
                        detail::pow_int(4.0, s);
    TestFunction f;
    f.name = "sine_power";
    f.d = d;
    f.s = s;
    f.exact_integral = detail::pow_int(mean, d);
    f.vanishing = true;
    f.evaluator = [d, s](std::span<const double> x) {
        double v = 1.0;
        for (int i = 0; i < d; ++i) {
            const double t = std::sin(std::numbers::pi * x[i]);
            v *= detail::pow_int(t, 2 * s);
        }
        return v;
    };
    f.transform = [s](double y) {
        // sin^{2s}(pi x) = 4^{-s} sum_j (-1)^j binom(2s, s+j) e^{2 pi i j x}
        std::complex<double> acc = 0.0;
        const double scale = 1.0 / detail::pow_int(4.0, s);
        for (int j = -s; j <= s; ++j) {
            const double cj = ((j % 2) ? -1.0 : 1.0) *
                              static_cast<double>(detail::binomial_ull(2 * s, s + j)) * scale;
            acc += cj * detail::interval_exponential_transform(j - y);
        }
        return acc;
    };
    return f;
}

// Product of cos(2 pi k_j x_j): integral 1 for k = 0 and 0 otherwise. Not
// boundary-vanishing, so it is for periodized rules or for 1-D
// rectangle-rule exactness probes.
inline TestFunction trig_mode(int d, std::vector<long long> k) {
    if (d < 1) throw DomainError("trig_mode: d must be >= 1");
    if (static_cast<int>(k.size()) != d) throw DomainError("trig_mode: k must have d entries");
    bool zero = true;
    for (long long v : k)
        if (v != 0) zero = false;
    TestFunction f;
    f.name = "trig_mode";
    f.d = d;
    f.s = 0;
    f.exact_integral = zero ? 1.0 : 0.0;
    f.vanishing = false;
    f.evaluator = [d, k = std::move(k)](std::span<const double> x) {
        double v = 1.0;
        for (int i = 0; i < d; ++i) v *= std::cos(2.0 * std::numbers::pi * k[i] * x[i]);
        return v;
    };
    return f;
}

// Selector grammar: name:key=value[,key=value]*. Integer vectors use 'x' as
// the separator ("k=1x0"). A selector may restate d; it must then agree
// with the dimension picked on the command line.
inline TestFunction parse_function(const std::string& selector, int d) {
    const auto colon = selector.find(':');
    const std::string name = selector.substr(0, colon);
    long long p = -1, s = -1;
    std::vector<long long> k;
    bool have_k = false;

    if (colon != std::string::npos) {
        std::string rest = selector.substr(colon + 1);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t next = rest.find(',', pos);
            if (next == std::string::npos) next = rest.size();
            const std::string kv = rest.substr(pos, next - pos);
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw DomainError("function selector: expected key=value, got '" + kv + "'");
            const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
            try {
                if (key == "d") {
                    if (std::stoll(value) != d)
                        throw DomainError("function selector: d=" + value +
                                          " disagrees with --dimension " + std::to_string(d));
                } else if (key == "p") {
                    p = std::stoll(value);
                } else if (key == "s") {
                    s = std::stoll(value);
                } else if (key == "k") {
                    have_k = true;
                    size_t q = 0;
                    while (q <= value.size()) {
                        size_t r = value.find('x', q);
                        if (r == std::string::npos) r = value.size();
                        k.push_back(std::stoll(value.substr(q, r - q)));
                        q = r + 1;
                        if (r == value.size()) break;
                    }
                } else {
                    throw DomainError("function selector: unknown key '" + key + "'");
                }
            } catch (const std::invalid_argument&) {
                throw DomainError("function selector: bad integer in '" + kv + "'");
            } catch (const std::out_of_range&) {
                throw DomainError("function selector: integer out of range in '" + kv + "'");
            }
            pos = next + 1;
        }
    }

    if (name == "bump") {
        if (have_k || s >= 0) throw DomainError("bump takes only p");
        return bump(d, p < 0 ? 1 : static_cast<int>(p));
    }
    if (name == "sine_power") {
        if (have_k || p >= 0) throw DomainError("sine_power takes only s");
        return sine_power(d, s < 0 ? 1 : static_cast<int>(s));
    }
    if (name == "trig_mode") {
        if (p >= 0 || s >= 0) throw DomainError("trig_mode takes only k");
        if (!have_k) k.assign(d, 0);
        if (static_cast<int>(k.size()) == 1 && d > 1) k.assign(d, k[0]);
        return trig_mode(d, std::move(k));
    }
    throw DomainError("unknown function '" + name + "' (expected bump, sine_power, or trig_mode)");
}

} // namespace frolov
