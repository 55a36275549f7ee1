#pragma once

#include <cstdint>
#include <string_view>

namespace stumpbounds {

/**
 * Deterministic PRNG used by every stochastic operation in the library.
 *
 * The generator is xoshiro256++ seeded through splitmix64, so the same
 * seed produces bit-identical streams on every platform. Uniform and
 * normal variates are derived here (instead of <random> distributions,
 * whose output is implementation-defined).
 *
 * Streams are partitioned per call site: child("label") derives an
 * independent generator from (root seed, label), so the sequence drawn
 * by one operation never depends on how many variates another operation
 * consumed.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01();

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);

    /// Unbiased uniform index in [0, n). n must be >= 1.
    std::size_t uniform_index(std::size_t n);

    /// Standard normal via Box-Muller (one spare cached).
    double normal();

    /// Rademacher variate, -1 or +1 with equal probability.
    int rademacher();

    /// Independent stream derived from (root seed, label).
    Rng child(std::string_view label) const;

    /// Independent stream derived from (root seed, label, index); used to
    /// give each repetition / draw / round its own stream.
    Rng child(std::string_view label, std::uint64_t index) const;

    std::uint64_t root_seed() const { return root_seed_; }

private:
    std::uint64_t state_[4];
    std::uint64_t root_seed_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace stumpbounds
