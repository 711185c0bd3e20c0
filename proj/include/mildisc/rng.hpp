#pragma once

#include <cstdint>

namespace mildisc {

// Counter-based randomness. Every draw is a pure function of its key, so
// results do not depend on iteration order or thread scheduling.

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix_key(std::uint64_t seed, std::uint64_t a) noexcept {
    return splitmix64(splitmix64(seed) ^ (a + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t mix_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
    return mix_key(mix_key(seed, a), b);
}

/// Uniform double strictly inside (0, 1).
constexpr double unit_open(std::uint64_t bits) noexcept {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Sequential stream over a key; used where a short run of draws is needed
/// (per-class shuffles in the stratified split).
class KeyedStream {
public:
    explicit constexpr KeyedStream(std::uint64_t key) noexcept : key_(key) {}

    constexpr std::uint64_t next() noexcept { return mix_key(key_, counter_++); }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        // rejection keeps the draw unbiased
        const std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace mildisc
