#ifndef PLANAR_CORESET_RANDOM_HPP_
#define PLANAR_CORESET_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace planar_coreset {

// Distribution helpers are hand-rolled so that seeded runs produce identical
// streams on every platform (the std:: distributions are implementation
// defined).

inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

/// Derives an independent stream for a sub-task (bucket index, retry round).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_RANDOM_HPP_
