#pragma once

#include <cstdint>

namespace qtones {

/// SplitMix64 (Steele, Lea, Flood 2014). This is the generator behind all
/// shot sampling, chosen so that counts are reproducible from the seed alone
/// on any platform: the standard <random> distributions are
/// implementation-defined, this is not.
///
/// One 64-bit draw per call:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
///   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) using the top 53 bits of one draw.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Integer in [0, bound). Modulo bias is < bound/2^64, irrelevant here.
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    /// Independent child stream keyed off one draw.
    SplitMix64 split() { return SplitMix64(next_u64()); }

  private:
    std::uint64_t state_;
};

} // namespace qtones
