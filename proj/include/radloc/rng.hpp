#pragma once

#include <cstdint>

namespace radloc {

// splitmix64 (Vigna's public-domain mixer). Chosen over <random> engines plus
// std::uniform_real_distribution because its output is fully defined by the
// seed, with no implementation-defined steps, so published CSVs reproduce
// bit-for-bit across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1): top 53 bits scaled by 2^-53.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

private:
    std::uint64_t state_;
};

namespace detail {

// splitmix64 finalizer as a standalone hash step.
inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t absorb(std::uint64_t h, std::uint64_t word) {
    return mix64(h ^ (word + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2)));
}

} // namespace detail

// Substream seed for one trial. Depends on exactly (master seed, trial index,
// the two sweepable dimensions), so a trial reproduces identically whether it
// runs inside a sweep, in isolation, or on any number of workers.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                        std::uint64_t trial_index,
                                        std::uint64_t num_anchors,
                                        std::uint64_t num_sensors) {
    std::uint64_t h = detail::mix64(master_seed);
    h = detail::absorb(h, trial_index);
    h = detail::absorb(h, num_anchors);
    h = detail::absorb(h, num_sensors);
    return h;
}

} // namespace radloc
