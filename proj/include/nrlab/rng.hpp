#ifndef NRLAB_RNG_HPP
#define NRLAB_RNG_HPP

#include <cstdint>

namespace nrlab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based generator: every draw is a pure function of (seed, stream,
// counter), so independent streams can run in any order and still reproduce.
struct CounterRng {
    std::uint64_t seed;
    std::uint64_t stream;
    std::uint64_t counter = 0;

    std::uint64_t next_u64() {
        std::uint64_t h = splitmix64(seed);
        h = splitmix64(h ^ stream);
        h = splitmix64(h ^ counter++);
        return h;
    }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }
};

}  // namespace nrlab

#endif  // NRLAB_RNG_HPP
