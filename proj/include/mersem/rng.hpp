#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace mersem {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Deterministic random stream. The engine is mt19937_64 (bit-exact across
// platforms by the standard); the uniform draws are hand-rolled because the
// <random> distributions are implementation-defined and would break
// reproducibility across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Derives an independent stream from a base seed and a tag tuple, e.g.
    // Rng::stream(seed, kStreamOffspring, epoch, generation, index).
    template <typename... Tags>
    static Rng stream(std::uint64_t seed, Tags... tags) {
        std::uint64_t s = seed;
        ((s = splitmix64(s ^ static_cast<std::uint64_t>(tags))), ...);
        return Rng(s);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform in [0, n); unbiased via rejection. n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    // Uniform integer in [lo, hi], inclusive.
    int int_in(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

// Stream purpose tags; keep values stable, they are part of run reproducibility.
enum StreamPurpose : std::uint64_t {
    kStreamWorkload = 1,
    kStreamInitPop = 2,
    kStreamOffspring = 3,
    kStreamLocalSearch = 4,
    kStreamBaseline = 5,
};

} // namespace mersem
