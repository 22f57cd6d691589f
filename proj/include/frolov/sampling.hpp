#pragma once

#include <cstdint>
#include <random>

namespace frolov {

// Seeded sampler for the randomized verification suites. The helpers map
// raw engine words to values directly instead of going through
// std::uniform_*_distribution, whose output is implementation-defined; the
// byte-identical-output contract needs the same draws everywhere.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive bounds, rejection sampling keeps the distribution exact
    long long uniform_int(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        const std::uint64_t limit = (UINT64_MAX / span) * span;
        std::uint64_t r;
        do {
            r = gen();
        } while (r >= limit);
        return lo + static_cast<long long>(r % span);
    }
};

} // namespace frolov
