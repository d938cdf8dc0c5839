#ifndef CPCODES_RNG_HPP
#define CPCODES_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace cpcodes {

/// SplitMix64 step; used to derive independent substream seeds from a master
/// seed plus integer identifiers, so parallel trial results do not depend on
/// scheduling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based substream seed: mixes the master seed with a path of ids.
inline std::uint64_t substream_seed(std::uint64_t master, std::initializer_list<std::uint64_t> ids) {
    std::uint64_t s = master;
    for (std::uint64_t id : ids) {
        s ^= splitmix64(s) + id;
        (void)splitmix64(s);
    }
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::initializer_list<std::uint64_t> ids) {
    return std::mt19937_64(substream_seed(master, ids));
}

}  // namespace cpcodes

#endif
