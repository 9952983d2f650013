#pragma once

#include <cstdint>

namespace centraldeg {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * Counter-based generator: the i-th draw of a (seed, stream) pair is a pure
 * function of (seed, stream, i), so output is identical on every platform and
 * independent of the order in which draws are requested.
 */
class CounterRng
{
public:
    constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(mix64(seed ^ mix64(stream ^ 0x5bd1e995ULL)))
    {}

    constexpr std::uint64_t bits(std::uint64_t index) const noexcept { return mix64(key_ + mix64(index)); }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double unit(std::uint64_t index) const noexcept
    {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

    constexpr double uniform(std::uint64_t index, double lo, double hi) const noexcept
    {
        return lo + (hi - lo) * unit(index);
    }

    // Sequential convenience API over the same counter space.
    double next_uniform(double lo, double hi) noexcept { return uniform(counter_++, lo, hi); }
    double next_unit() noexcept { return unit(counter_++); }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Named streams so distinct pieces of an instance never share draws.
namespace streams {
inline constexpr std::uint64_t constraint_matrix = 1;
inline constexpr std::uint64_t certificate = 2;
inline constexpr std::uint64_t cost = 3;
inline constexpr std::uint64_t dual_certificate = 4;
inline constexpr std::uint64_t quadratic = 5;
inline constexpr std::uint64_t slice = 6;
inline constexpr std::uint64_t slack = 7;
inline constexpr std::uint64_t sample_covariance = 8;
inline constexpr std::uint64_t form = 9;
inline constexpr std::uint64_t gamma = 100;
inline constexpr std::uint64_t start_system = 101;
} // namespace streams

} // namespace centraldeg
