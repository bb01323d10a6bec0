#pragma once

#include <cstdint>

namespace spinphoton {

// Counter-based pseudo-random numbers (SplitMix64 kernel).  Every value
// is a pure function of (seed, counter), so trial substreams can be
// evaluated in any order and on any number of workers with identical
// results.

std::uint64_t mix64(std::uint64_t z);

// The n-th 64-bit output of the SplitMix64 stream for this seed.
std::uint64_t rng_at(std::uint64_t seed, std::uint64_t counter);

// Uniform double in [0, 1) from the same stream position.
double u01_at(std::uint64_t seed, std::uint64_t counter);

// Stateful view over a counter stream, for sequential samplers.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t start = 0) : seed_(seed), counter_(start) {}

    std::uint64_t next_u64() { return rng_at(seed_, counter_++); }
    double next_u01() { return u01_at(seed_, counter_++); }
    // Standard normal via Box-Muller (consumes two counters).
    double next_normal();

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

}  // namespace spinphoton
