#pragma once

#include <cstdint>
#include <string_view>

namespace bfree {

/// Identifier recorded in every sample batch's metadata.
inline constexpr std::string_view kGeneratorId = "splitmix64-counter-v1";

/// Stateless counter-based generator: every draw is a pure function of
/// (seed, stream, sample index, coordinate), so batches can be produced in
/// any order or in parallel and still agree bit for bit.
class CounterRng {
public:
    enum Stream : std::uint64_t { kOdometer = 1, kMask = 2, kPhase = 3, kUser = 4 };

    explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    constexpr std::uint64_t seed() const noexcept { return seed_; }

    static constexpr std::uint64_t mix(std::uint64_t x) noexcept {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    constexpr std::uint64_t bits(std::uint64_t stream, std::uint64_t sample,
                                 std::int64_t coordinate) const noexcept {
        std::uint64_t h = mix(seed_ ^ (stream * 0xd1b54a32d192ed03ULL));
        h = mix(h ^ sample);
        return mix(h ^ static_cast<std::uint64_t>(coordinate));
    }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform(std::uint64_t stream, std::uint64_t sample,
                             std::int64_t coordinate) const noexcept {
        return static_cast<double>(bits(stream, sample, coordinate) >> 11) * 0x1.0p-53;
    }

    /// Uniform on [0, n) by the multiply-high reduction (bias below n / 2^64).
    std::uint64_t below(std::uint64_t n, std::uint64_t stream, std::uint64_t sample,
                        std::int64_t coordinate) const noexcept {
        const auto wide = static_cast<unsigned __int128>(bits(stream, sample, coordinate)) * n;
        return static_cast<std::uint64_t>(wide >> 64);
    }

    constexpr bool bernoulli(double p, std::uint64_t stream, std::uint64_t sample,
                             std::int64_t coordinate) const noexcept {
        return uniform(stream, sample, coordinate) < p;
    }

private:
    std::uint64_t seed_;
};

}  // namespace bfree
