#ifndef BVSYM_RNG_HPP
#define BVSYM_RNG_HPP

#include <cstdint>

namespace bvsym {

/// Counter-based splittable generator (splitmix64 core).  Streams keyed by
/// (seed, stream) are independent of evaluation order, so suite instances
/// stay reproducible under parallel execution.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(seed ^ mix(stream * 0x9E3779B97F4A7C15ULL + 1))) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) { return next() % n; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace bvsym

#endif
