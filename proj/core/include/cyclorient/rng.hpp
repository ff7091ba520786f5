#pragma once

#include <cstdint>

namespace cyclorient {

/// SplitMix64 (Steele/Lea/Flood, as published by Vigna). Chosen because the
/// algorithm is short enough to restate in any language, so seeded corpora
/// can be regenerated bit-for-bit outside this codebase.
///
/// Derived draws are defined exactly as:
///   uniform_below(b) = next() % b
///   uniform_int(lo, hi) = lo + next() % (hi - lo + 1)
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound must be nonzero.
    constexpr std::uint64_t uniform_below(std::uint64_t bound) noexcept {
        return next() % bound;
    }

    /// Uniform value in [lo, hi], inclusive on both ends.
    constexpr int uniform_int(int lo, int hi) noexcept {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

} // namespace cyclorient
