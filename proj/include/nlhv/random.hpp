#pragma once

// SplitMix64 (Steele, Lea & Flood 2014; reference implementation by Vigna).
// Seed 1234567 yields 6457827717110365317, 3203168211198807973,
// 9817491932198370423, 4593380528125082431, 16408922859458223821.

#include <cstdint>

namespace nlhv {

class SplitMix64 {
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t next() noexcept { return mix(state_ += kGamma); }
    constexpr std::uint64_t operator()() noexcept { return next(); }

    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Independent stream number `index` of `seed`. The stream seed is the
    /// index-th output of a SplitMix64 started from a remixed seed, so it can be
    /// computed in O(1) by any worker.
    static constexpr SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
        const std::uint64_t base = mix(seed ^ 0x6a09e667f3bcc909ULL);
        return SplitMix64(mix(base + (index + 1) * kGamma));
    }

private:
    std::uint64_t state_;
};

}  // namespace nlhv
