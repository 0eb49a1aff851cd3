#pragma once

#include "papr/types.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>

namespace papr {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of the stream for item `index` of a campaign. Depends on nothing else, so
/// item i draws the same numbers whatever the worker count or campaign length.
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index, std::uint64_t domain = 0) noexcept
{
    return splitmix64(splitmix64(splitmix64(master) ^ index) ^ (domain * 0xd1342543de82ef95ULL));
}

/// mt19937_64 raw output is fixed by the standard; the helpers below only use raw
/// words, so every draw is identical across standard library implementations.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t master, std::uint64_t index, std::uint64_t domain = 0)
{
    return Rng{stream_seed(master, index, domain)};
}

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, n) by multiply-shift.
inline std::size_t uniform_index(Rng& rng, std::size_t n)
{
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::size_t>((static_cast<u128>(rng()) * n) >> 64);
}

/// Standard normal draw (Box-Muller on raw words).
inline double gaussian(Rng& rng)
{
    const double u1 = 1.0 - uniform01(rng);  // (0, 1]
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

inline Bits random_bits(Rng& rng, std::size_t count)
{
    Bits bits(count);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (i % 64 == 0) word = rng();
        bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1U);
    }
    return bits;
}

}  // namespace papr
