#include "spinphoton/rng.hpp"

#include <cmath>
#include <numbers>

namespace spinphoton {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t rng_at(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
}

double u01_at(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(rng_at(seed, counter) >> 11) * 0x1.0p-53;
}

double RngStream::next_normal() {
    // (0, 1] for the log argument
    const double u = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double v = next_u01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace spinphoton
