// Deterministic, splittable PRNG used for every random draw in the toolkit.
//
// The generator is SplitMix64 (Steele, Lea & Flood; the java.util reference
// constants). A stream is derived from (master_seed, stream_id) by two
// finalizer rounds:
//
//   s0 = mix(master_seed ^ 0x6A09E667F3BCC909)        // frac(sqrt 2) bits
//   state = mix(s0 + stream_id * 0x9E3779B97F4A7C15)  // golden-ratio step
//
// and each draw is the canonical SplitMix64 step. Only 64-bit integer
// arithmetic is involved, so identical (master_seed, stream_id) pairs
// reproduce bit-identical sequences on every platform. Independent trials
// should use distinct stream ids under one master seed.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace qsec {

// Master seed plus stream selector; the unit of reproducibility.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

class RngStream {
public:
    explicit RngStream(Seed seed) : RngStream(seed.master, seed.stream) {}

    RngStream(std::uint64_t master_seed, std::uint64_t stream_id) {
        std::uint64_t s0 = mix(master_seed ^ 0x6A09E667F3BCC909ULL);
        state_ = mix(s0 + stream_id * kGolden);
    }

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bit() { return (next_u64() >> 63) != 0; }

    // Uniform in [0, bound); unbiased via power-of-two mask rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
        if (bound == 1) return 0;
        const std::uint64_t mask =
            bound > (1ULL << 63) ? ~0ULL : std::bit_ceil(bound) - 1;
        for (;;) {
            std::uint64_t v = next_u64() & mask;
            if (v < bound) return v;
        }
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t state_ = 0;
};

}  // namespace qsec
