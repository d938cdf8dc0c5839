#ifndef CPCODES_CHANNEL_HPP
#define CPCODES_CHANNEL_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cpcodes/codebook.hpp"

namespace cpcodes {

/// Coordinates within this of each other compare equal in the complex domain.
constexpr double kComplexTol = 1e-9;

/// One injected error pattern: (position, new symbol) per corrupted
/// coordinate. In the complex domain the new coordinate value is chi(symbol).
struct ErrorPattern {
    std::vector<std::pair<std::size_t, std::uint32_t>> entries;

    std::size_t weight() const noexcept { return entries.size(); }
};

std::size_t hamming_distance(const FieldCodeword& a, const FieldCodeword& b);
std::size_t hamming_distance(const ComplexWord& a, const ComplexWord& b);

/// Replace exactly w coordinates with uniformly random different symbols.
std::pair<FieldCodeword, ErrorPattern> inject_field_errors(const FieldCodeword& c, std::size_t w,
                                                           std::mt19937_64& rng);

/// Replace exactly w coordinates with chi(x') for a uniformly random symbol
/// x' different from the original one. Input coordinates must be exact
/// character values.
std::pair<ComplexWord, ErrorPattern> inject_complex_errors(const ComplexWord& c,
                                                           const CodeParams& params, std::size_t w,
                                                           std::mt19937_64& rng);

}  // namespace cpcodes

#endif
