#pragma once

#include <cstdint>

namespace graphhd {

// All randomness in the library flows through this header. Everything is
// derived from a user seed with SplitMix64-style mixing, so results are
// bit-identical across platforms and runs; std::random distributions are
// avoided on purpose (their output is implementation-defined).

namespace rng {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer. Bijective on 64-bit values.
constexpr std::uint64_t mix(std::uint64_t x) noexcept {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent stream tags so that, e.g., basis vector 3 and ER graph 3
// never see the same key.
enum Stream : std::uint64_t {
    kBasisStream = 1,
    kTieBreakStream = 2,
    kErGraphStream = 3,
    kShuffleStream = 4,
};

// Key for stream element `index` under `seed`. Pure function of its inputs.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t index) noexcept {
    return mix(mix(seed + kGolden * (stream + 1)) ^ (index + kGolden));
}

}  // namespace rng

// Deterministic 64-bit generator (SplitMix64).
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += rng::kGolden;
        return rng::mix(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    constexpr double next_unit() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound) without modulo bias (Lemire reduction).
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace graphhd
