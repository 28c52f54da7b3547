// Deterministic 64-bit generator (splitmix64), usable both as a sequential
// stream and in pure counter mode. Counter mode makes draw i of a seeded
// stream a pure function of (seed, i), which is what keeps random search
// results independent of scheduling. Algorithm identifier: splitmix64-ctr-v1.

#ifndef VECCIRC_RNG_HPP
#define VECCIRC_RNG_HPP

#include <cstdint>

namespace veccirc {

inline constexpr char kRngAlgorithm[] = "splitmix64-ctr-v1";

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Word `counter` of the stream with the given seed (counter mode).
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
    return splitmix64_mix(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Sequential form of the same stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64_mix(state_ += 0x9E3779B97F4A7C15ULL); }

    /// Uniform value in [0, bound) via the fixed-point multiply reduction.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace veccirc

#endif
