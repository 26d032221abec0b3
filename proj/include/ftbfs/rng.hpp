#pragma once

#include <cstdint>

namespace ftbfs {

// splitmix64 is the reference generator behind every seeded behavior in this
// library (graph generation, failure-pair sampling, spanner source
// selection). Keeping the raw stream and the derived draws pinned here is
// what makes seeded runs byte-reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // True with probability p. Uses the top 53 bits against p * 2^53, which
    // is exact in double arithmetic, so the decision sequence for a given
    // seed is identical everywhere. p <= 0 never fires, p >= 1 always does.
    bool bernoulli(double p) {
        std::uint64_t draw = next() >> 11;
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return draw < static_cast<std::uint64_t>(p * 9007199254740992.0);
    }

    // Uniform value in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= limit);
        return draw % bound;
    }

private:
    std::uint64_t state_;
};

}  // namespace ftbfs
