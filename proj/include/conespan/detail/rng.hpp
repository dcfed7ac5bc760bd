#pragma once

#include <cstdint>
#include <random>

namespace conespan::detail {

// Deterministic uniform doubles independent of the standard library's
// distribution implementations.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }  // [0, 1)

    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

    std::uint64_t next_u64() { return gen(); }
};

}  // namespace conespan::detail
