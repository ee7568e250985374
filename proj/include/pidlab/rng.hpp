#pragma once

#include <cstdint>

#include "pidlab/matrix.hpp"

namespace pidlab {

/// xoshiro256++ generator seeded through splitmix64.
///
/// Substream rule: substream(seed, trial) seeds splitmix64 with
/// seed XOR (golden-ratio increment * (trial + 1)) and draws the four state
/// words from it. Trials therefore get reproducible, scheduling-independent
/// streams. Doubles are built from the top 53 bits, so every draw is fully
/// determined by (seed, trial, call index).
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    static Rng substream(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Box-Muller normal; consumes exactly two uniforms per call.
    double normal(double mean = 0.0, double stddev = 1.0);
    /// Uniform integer in [lo, hi] inclusive.
    std::uint64_t uniform_index(std::uint64_t lo, std::uint64_t hi);

private:
    std::uint64_t state_[4];
};

/// N x D matrix with independent uniform entries in [lo, hi).
Matrix random_uniform_matrix(Rng& rng, std::size_t rows, std::size_t cols, double lo,
                             double hi);

/// N x D matrix with independent normal(0, stddev) entries.
Matrix random_gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols, double stddev);

}  // namespace pidlab
