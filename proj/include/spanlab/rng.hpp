#pragma once

#include <cstdint>
#include <random>

namespace spanlab {

// splitmix64 step; used to derive independent substreams from one seed.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(uint64_t seed, uint64_t stream = 0) {
    return std::mt19937_64(mix64(seed + 0x100 * stream + stream));
}

}  // namespace spanlab
