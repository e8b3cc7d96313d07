#pragma once

#include <cstdint>

namespace fq {

// Stateless splitmix-style finalizer. Draws are keyed purely by counters, so
// any evaluation order or worker layout reproduces the identical stream.
inline std::uint64_t counter_mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t a,
                                  std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = counter_mix(seed);
    h = counter_mix(h ^ a);
    h = counter_mix(h ^ b);
    h = counter_mix(h ^ c);
    return h;
}

// Uniform double in [0,1) from the top 53 bits of the keyed hash.
inline double counter_uniform(std::uint64_t seed, std::uint64_t sample,
                              std::uint64_t arg, std::uint64_t elem) {
    return static_cast<double>(counter_hash(seed, sample, arg, elem) >> 11) * 0x1.0p-53;
}

}  // namespace fq
