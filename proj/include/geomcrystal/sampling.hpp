#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "geomcrystal/rational.hpp"

namespace geomcrystal {

/// Uniform integer in [1, bound], unbiased, portable.
///
/// std::mt19937_64 output is fully specified by the standard, and the
/// rejection step below avoids std::uniform_int_distribution (whose
/// mapping is implementation-defined), so identical seeds give identical
/// draws on every platform.
inline std::uint64_t uniform_1_to(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound < 1)
        throw std::invalid_argument("uniform_1_to: bound must be >= 1");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound + 1;
}

/// Random positive rational p/q with p, q independent uniform in [1, bound].
inline Rational sample_positive(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t p = uniform_1_to(rng, bound);
    const std::uint64_t q = uniform_1_to(rng, bound);
    return Rational(static_cast<long>(p), static_cast<long>(q));
}

/// splitmix64 finalizer, used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Generator for one verification trial: depends only on (seed, trial),
/// so trials can run in any order or in parallel with identical results.
inline std::mt19937_64 trial_generator(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(mix_seed(seed ^ mix_seed(trial)));
}

}  // namespace geomcrystal
