#ifndef PROXINERVE_RNG_HPP
#define PROXINERVE_RNG_HPP

#include <cstdint>
#include <random>

namespace proxinerve {

/**
 * Seeded random source with portable real/integer draws.
 *
 * std::uniform_real_distribution is implementation-defined, so doubles are
 * derived from raw 64-bit draws directly; outputs are identical on every
 * platform for a given seed, which report goldens rely on.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the draw unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace proxinerve

#endif
